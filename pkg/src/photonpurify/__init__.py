"""Heralded single-photon purification on passive linear optics.

Two zero/one-photon superpositions interfere on a beam splitter chosen to
cancel the single-photon term of the conditioned output; a second splitter
and a one-photon detection then herald an exact |1> state. This package
simulates the circuit on sparse Fock states, solves and optimizes the
splitter parameters, sweeps parameter grids deterministically, and checks
itself against a permanent-free oracle.
"""

from ._kernels import BACKEND, backends
from .errors import (
    ConfigInvalid,
    CutoffExceeded,
    DuplicateMode,
    IndexOutOfRange,
    ModeMismatch,
    NotNormalized,
    NotSquare,
    NotUnitary,
    OutOfRange,
    PurityViolated,
    ZeroState,
)
from .expansion import (
    CreationPolynomial,
    polynomial_to_state,
    state_to_polynomial,
    substitute,
)
from .fock import (
    DEFAULT_CUTOFF,
    InputState,
    StateVector,
    fidelity,
    fock_state,
    inner_product,
    input_from_probability,
    input_to_state,
    make_input,
    normalize,
    sector_occupations,
    tensor,
    total_photons,
    vacuum,
)
from .measurement import ConditionResult, condition, outcome_distribution
from .optics import (
    BeamSplitterParams,
    InterferometerUnitary,
    apply,
    beamsplitter,
    embed,
    permanent,
)
from .scheme import (
    SchemeResult,
    StageOneCoefficients,
    closed_form_success,
    optimize_stage_two,
    run_scheme,
    solve_cancellation,
    stage_one_coefficients,
    stage_two,
    success_curve_new,
    success_curve_old,
)
from .verify import CheckResult, permanent_naive, run_checks

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "BeamSplitterParams",
    "CheckResult",
    "ConditionResult",
    "ConfigInvalid",
    "CreationPolynomial",
    "CutoffExceeded",
    "DEFAULT_CUTOFF",
    "DuplicateMode",
    "IndexOutOfRange",
    "InputState",
    "InterferometerUnitary",
    "ModeMismatch",
    "NotNormalized",
    "NotSquare",
    "NotUnitary",
    "OutOfRange",
    "PurityViolated",
    "SchemeResult",
    "StageOneCoefficients",
    "StateVector",
    "ZeroState",
    "apply",
    "backends",
    "beamsplitter",
    "closed_form_success",
    "condition",
    "embed",
    "fidelity",
    "fock_state",
    "inner_product",
    "input_from_probability",
    "input_to_state",
    "make_input",
    "normalize",
    "optimize_stage_two",
    "outcome_distribution",
    "permanent",
    "permanent_naive",
    "polynomial_to_state",
    "run_checks",
    "run_scheme",
    "sector_occupations",
    "solve_cancellation",
    "stage_one_coefficients",
    "stage_two",
    "state_to_polynomial",
    "substitute",
    "success_curve_new",
    "success_curve_old",
    "tensor",
    "total_photons",
    "vacuum",
]

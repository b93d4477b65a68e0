"""Two-stage circuit turning a pair of zero/one-photon superpositions into
a heralded single photon.

Stage 1 interferes the two inputs on a beam splitter Lambda and conditions
on zero photons at one output. The surviving mode then holds

    c0 |0> + c1 |1> + c2 |2>

with c0 = a1 a2, c1 = a2 b1 L00 + a1 b2 L01, c2 = sqrt(2) b1 b2 L00 L01,
writing (a_k, b_k) for the input amplitudes and L for the matrix of
``optics.beamsplitter``. Choosing Lambda so that c1 = 0 exactly removes the
single-photon term:

    tan(theta) e^{i phi} = -(a2 b1) / (a1 b2)

Stage 2 mixes the conditioned mode with vacuum on a second splitter
Lambda' and conditions on one photon at a detector. Because only |0> and
|2> remain, seeing exactly one photon forces the other output to hold
exactly one photon as well, so the heralded state is |1> with unit
fidelity whenever the detector can fire at all. The stage-2 detector sits
on the second of the two modes entering Lambda'; putting it on the first
gives identical statistics.

Conditional stage-2 success is 2 |c2n|^2 cos^2(theta2) sin^2(theta2) with
c2n the normalized two-photon amplitude, maximized by a 50/50 splitter.
The joint success probability reduces to |b1 b2|^2 sin^2(theta)
cos^2(theta), which is p^2/4 for identical inputs with one-photon
probability p.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import OutOfRange, PurityViolated
from .fock import (
    DEFAULT_CUTOFF,
    PRUNE_THRESHOLD,
    InputState,
    StateVector,
    fidelity,
    fock_state,
    input_to_state,
    normalize,
    tensor,
    vacuum,
)
from .measurement import condition
from .optics import BeamSplitterParams, apply, beamsplitter, embed

#: Residual single-photon amplitude allowed after cancellation.
CANCEL_TOL = 1e-10

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

#: Degenerate reason codes, reported in this order.
NO_PHOTON_PAIR = "no-photon-pair"
NO_VACUUM_AMPLITUDE = "no-vacuum-amplitude"
CANCELLATION_VACUOUS = "cancellation-vacuous"


@dataclass(frozen=True)
class StageOneCoefficients:
    """Unnormalized |0>, |1>, |2> amplitudes after the first detection."""

    c0: complex
    c1: complex
    c2: complex

    @property
    def norm_squared(self) -> float:
        return abs(self.c0) ** 2 + abs(self.c1) ** 2 + abs(self.c2) ** 2


@dataclass(frozen=True)
class SchemeResult:
    """Full-circuit outcome for one pair of inputs."""

    lambda1: BeamSplitterParams
    lambda2: BeamSplitterParams
    stage_one_probability: float
    stage_two_probability: float
    p_success: float
    output_fidelity: float
    degenerate: bool
    degenerate_reasons: tuple[str, ...]
    output_state: StateVector | None


def stage_one_coefficients(
    in1: InputState, in2: InputState, bs: BeamSplitterParams
) -> StageOneCoefficients:
    """Closed-form amplitudes left on the undetected stage-1 mode."""
    m = beamsplitter(bs).matrix
    c0 = in1.alpha * in2.alpha
    c1 = in2.alpha * in1.beta * m[0, 0] + in1.alpha * in2.beta * m[0, 1]
    c2 = math.sqrt(2.0) * in1.beta * in2.beta * m[0, 0] * m[0, 1]
    return StageOneCoefficients(complex(c0), complex(c1), complex(c2))


def solve_cancellation(
    in1: InputState, in2: InputState
) -> tuple[BeamSplitterParams, bool]:
    """Beam splitter removing the stage-1 single-photon term.

    Solves tan(theta) e^{i phi} = -t1/t2 with t1 = a2 b1 and t2 = a1 b2,
    taking theta in [0, pi/2] and phi as the principal argument. When one
    term vanishes the equation degenerates to a pure theta condition; when
    both vanish any splitter cancels, so the identical-input limit
    (pi/4, pi) is returned and the vacuous flag is set.
    """
    t1 = in2.alpha * in1.beta
    t2 = in1.alpha * in2.beta
    if t1 == 0 and t2 == 0:
        return BeamSplitterParams(math.pi / 4, math.pi), True
    if t2 == 0:
        return BeamSplitterParams(math.pi / 2, 0.0), False
    if t1 == 0:
        return BeamSplitterParams(0.0, 0.0), False
    ratio = -t1 / t2
    return BeamSplitterParams(math.atan(abs(ratio)), cmath.phase(ratio)), False


def stage_two(
    c: StageOneCoefficients, bs2: BeamSplitterParams
) -> tuple[float, StateVector | None]:
    """Mix the conditioned mode with vacuum and herald on one photon.

    Returns the conditional success probability and the heralded state on
    the surviving mode (None when the detector can never fire). The purity
    precondition |c1| <= CANCEL_TOL is enforced; past it the residual c1
    is dropped, so the heralded state is exactly |1>.
    """
    if abs(c.c1) > CANCEL_TOL:
        raise PurityViolated(
            f"|c1| = {abs(c.c1):.3e} exceeds {CANCEL_TOL:.0e}; cancel first"
        )
    if max(abs(c.c0), abs(c.c2)) <= PRUNE_THRESHOLD:
        return 0.0, None
    raw = StateVector(1, {(0,): complex(c.c0), (2,): complex(c.c2)}, DEFAULT_CUTOFF)
    c_state, _ = normalize(raw)
    joint = tensor(c_state, vacuum(1, DEFAULT_CUTOFF))
    mixed = apply(beamsplitter(bs2), joint)
    heralded = condition(mixed, {1: 1})
    return heralded.probability, heralded.state


def optimize_stage_two(c: StageOneCoefficients) -> BeamSplitterParams:
    """Numerically maximize stage-2 success over theta2, phi2 fixed at 0.

    Golden-section search on [0, pi/2] with interval tolerance 1e-10 plus
    one parabolic refinement. The objective is proportional to
    sin^2 cos^2 regardless of c, so the result always lands at pi/4; a
    flat (all-zero) objective returns pi/4 by convention.
    """
    if abs(c.c1) > CANCEL_TOL:
        raise PurityViolated(
            f"|c1| = {abs(c.c1):.3e} exceeds {CANCEL_TOL:.0e}; cancel first"
        )
    quarter = BeamSplitterParams(math.pi / 4, 0.0)
    if stage_two(c, quarter)[0] == 0.0:
        return quarter

    def objective(theta: float) -> float:
        return stage_two(c, BeamSplitterParams(theta, 0.0))[0]

    best = _golden_max(objective, 0.0, math.pi / 2, tol=1e-10)
    return BeamSplitterParams(best, 0.0)


def _golden_max(f, a: float, b: float, tol: float) -> float:
    # Golden-section search reusing one interior evaluation per step.
    # Value comparisons alone cannot place a smooth maximum better than
    # sqrt(eps), so a single parabolic fit through well-separated points
    # polishes the bracket midpoint afterwards.
    lo, hi = a, b
    c = b - (b - a) * _INVPHI
    d = a + (b - a) * _INVPHI
    fc = f(c)
    fd = f(d)
    while (b - a) > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * _INVPHI
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * _INVPHI
            fd = f(d)
    x = 0.5 * (a + b)
    h = 1e-4 * (hi - lo)
    if lo <= x - h and x + h <= hi:
        fm, f0, fp = f(x - h), f(x), f(x + h)
        denom = fm - 2.0 * f0 + fp
        if denom < 0:
            shift = 0.5 * h * (fm - fp) / denom
            x += max(-h, min(h, shift))
    return x


def _degenerate_reasons(
    in1: InputState, in2: InputState, vacuous: bool
) -> tuple[str, ...]:
    reasons = []
    if in1.beta * in2.beta == 0:
        reasons.append(NO_PHOTON_PAIR)
    if in1.alpha * in2.alpha == 0:
        reasons.append(NO_VACUUM_AMPLITUDE)
    if vacuous:
        reasons.append(CANCELLATION_VACUOUS)
    return tuple(reasons)


def run_scheme(
    in1: InputState,
    in2: InputState,
    *,
    cutoff: int = DEFAULT_CUTOFF,
    lambda2: BeamSplitterParams | None = None,
) -> SchemeResult:
    """Solve the cancellation splitter and simulate the whole circuit.

    Mode layout: 0 is the stage-2 vacuum ancilla, 1 and 2 carry the
    inputs. Lambda acts on (1, 2) and the stage-1 detector watches mode 2
    for zero photons; after renumbering, Lambda' acts on the remaining
    pair and the stage-2 detector watches the conditioned mode for one
    photon. p_success is the joint probability of both outcomes.

    lambda2 defaults to the analytic optimum, a 50/50 splitter. Degenerate
    inputs never raise; they come back flagged with honestly computed
    probabilities.
    """
    params, vacuous = solve_cancellation(in1, in2)
    reasons = _degenerate_reasons(in1, in2, vacuous)
    bs2 = lambda2 if lambda2 is not None else BeamSplitterParams(math.pi / 4, 0.0)

    circuit = tensor(
        vacuum(1, cutoff),
        tensor(input_to_state(in1, cutoff), input_to_state(in2, cutoff)),
    )
    mixed = apply(embed(beamsplitter(params), (1, 2), 3), circuit)
    stage1 = condition(mixed, {2: 0})
    if stage1.state is None:
        return SchemeResult(
            lambda1=params,
            lambda2=bs2,
            stage_one_probability=0.0,
            stage_two_probability=0.0,
            p_success=0.0,
            output_fidelity=0.0,
            degenerate=bool(reasons),
            degenerate_reasons=reasons,
            output_state=None,
        )

    mixed2 = apply(embed(beamsplitter(bs2), (0, 1), 2), stage1.state)
    heralded = condition(mixed2, {1: 1})
    p_success = stage1.probability * heralded.probability
    if heralded.state is None:
        fid = 0.0
    else:
        fid = fidelity(heralded.state, fock_state((1,), cutoff))
    return SchemeResult(
        lambda1=params,
        lambda2=bs2,
        stage_one_probability=stage1.probability,
        stage_two_probability=heralded.probability,
        p_success=p_success,
        output_fidelity=fid,
        degenerate=bool(reasons),
        degenerate_reasons=reasons,
        output_state=heralded.state,
    )


def closed_form_success(in1: InputState, in2: InputState) -> float:
    """Analytic joint success |b1 b2|^2 sin^2(theta) cos^2(theta).

    Uses the solved cancellation angle, so it agrees with run_scheme in
    the degenerate corners too. Validated against the simulation by the
    acceptance suite before being trusted anywhere else.
    """
    params, _ = solve_cancellation(in1, in2)
    s = math.sin(params.theta)
    c = math.cos(params.theta)
    return abs(in1.beta * in2.beta) ** 2 * (s * c) ** 2


def success_curve_new(p: float) -> float:
    """Joint success for identical inputs at one-photon probability p."""
    if not (0.0 <= p <= 1.0):
        raise OutOfRange(f"p must lie in [0, 1], got {p!r}")
    return p * p / 4.0


def success_curve_old(p: float) -> float:
    """Success of the earlier three-splitter proposal, for comparison."""
    if not (0.0 <= p <= 1.0):
        raise OutOfRange(f"p must lie in [0, 1], got {p!r}")
    return 16.0 * p**3 / 81.0

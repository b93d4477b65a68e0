"""Passive interferometer unitaries and their action on Fock states.

Mode convention, stated once for the whole package: **columns transform
creation operators**. For a unitary U acting on M modes,

    a_j^dag  ->  sum_i U[i, j] a_i^dag

so column j of U is the image of mode j's creation operator. Mixing up the
row and column convention is the single most likely implementation bug in
this kind of simulator; every routine here and in the oracle module uses
the column form.

Beam splitters are parameterized by a mixing angle theta and one phase phi:

    [[cos(theta),               exp(i phi) sin(theta)],
     [-exp(-i phi) sin(theta),  cos(theta)           ]]

Two parameters suffice because global and external phases never change
post-selection probabilities or the fidelity to a photon-number state.

Transition amplitudes between occupations are matrix permanents of row- and
column-repeated submatrices:

    <n'|U|n> = per(U[n', n]) / sqrt(prod_i n_i! * prod_j n'_j!)

where U[n', n] repeats row i n'_i times and column j n_j times. The
permanent itself is evaluated by a Ryser-type kernel (compiled when
available, pure Python otherwise) with direct formulas below dimension 3.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._kernels import permanent_kernel
from .errors import (
    DuplicateMode,
    IndexOutOfRange,
    ModeMismatch,
    NotSquare,
    NotUnitary,
    OutOfRange,
)
from .fock import StateVector, sector_occupations

#: Unitarity tolerance at construction; looser than the norm tolerance
#: after apply because user-supplied matrices may come from text files.
UNITARITY_TOL = 1e-10

# Exact factorials up to well past the default cutoff.
_FACTORIALS = (1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800)


@dataclass(frozen=True)
class BeamSplitterParams:
    """(theta, phi) with theta in [0, pi/2] and phi in [-pi, pi]."""

    theta: float
    phi: float

    def __post_init__(self):
        if not (0.0 <= self.theta <= math.pi / 2):
            raise OutOfRange(f"theta {self.theta!r} outside [0, pi/2]")
        if not (-math.pi <= self.phi <= math.pi):
            raise OutOfRange(f"phi {self.phi!r} outside [-pi, pi]")


class InterferometerUnitary:
    """M x M unitary on mode creation operators (column convention).

    The matrix is validated against ||U^dag U - I||_max <= UNITARITY_TOL at
    construction and stored read-only.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix, *, _validate: bool = True):
        m = np.array(matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise NotSquare(f"interferometer matrix must be square, got shape {m.shape}")
        if m.shape[0] < 1:
            raise NotSquare("interferometer needs at least one mode")
        if _validate:
            defect = np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0])))
            if defect > UNITARITY_TOL:
                raise NotUnitary(
                    f"||U^dag U - I||_max = {defect:.3e} exceeds {UNITARITY_TOL:.0e}"
                )
        m.setflags(write=False)
        self.matrix = m

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __repr__(self):
        return f"InterferometerUnitary(dim={self.dim})"


def beamsplitter(params: BeamSplitterParams) -> InterferometerUnitary:
    """Two-mode unitary for the given mixing angle and phase."""
    c = math.cos(params.theta)
    s = math.sin(params.theta)
    ph = cmath.exp(1j * params.phi)
    return InterferometerUnitary([[c, ph * s], [-s / ph, c]])


def embed(
    u: InterferometerUnitary, target_modes: tuple[int, int], total_modes: int
) -> InterferometerUnitary:
    """Place a 2-mode unitary on the given modes of a larger interferometer.

    ``target_modes[0]`` receives u's first mode, ``target_modes[1]`` its
    second; every other mode passes through untouched.
    """
    i, j = target_modes
    if u.dim != 2:
        raise ModeMismatch(f"embed expects a 2-mode unitary, got dim {u.dim}")
    for t in (i, j):
        if not (0 <= t < total_modes):
            raise IndexOutOfRange(f"target mode {t} outside 0..{total_modes - 1}")
    if i == j:
        raise DuplicateMode(f"target modes must be distinct, got {target_modes}")
    full = np.eye(total_modes, dtype=np.complex128)
    full[i, i] = u.matrix[0, 0]
    full[i, j] = u.matrix[0, 1]
    full[j, i] = u.matrix[1, 0]
    full[j, j] = u.matrix[1, 1]
    return InterferometerUnitary(full)


def permanent(m) -> complex:
    """Matrix permanent. Direct formulas for dims 0-2, Ryser kernel above.

    Empty matrices have permanent 1 by convention.
    """
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotSquare(f"permanent needs a square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        return 1.0 + 0j
    if n == 1:
        return complex(arr[0, 0])
    if n == 2:
        return complex(arr[0, 0] * arr[1, 1] + arr[0, 1] * arr[1, 0])
    return complex(permanent_kernel(np.ascontiguousarray(arr)))


def _repeated_permanent(matrix: np.ndarray, rows: list[int], cols: list[int]) -> complex:
    # Transition permanent with rows/cols given as repeated mode indices.
    # Small cases read scalars directly; building submatrices for 0-2
    # photons would dominate the hot path.
    k = len(rows)
    if k == 0:
        return 1.0 + 0j
    if k == 1:
        return complex(matrix[rows[0], cols[0]])
    if k == 2:
        return complex(
            matrix[rows[0], cols[0]] * matrix[rows[1], cols[1]]
            + matrix[rows[0], cols[1]] * matrix[rows[1], cols[0]]
        )
    sub = np.ascontiguousarray(matrix[np.ix_(rows, cols)])
    return complex(permanent_kernel(sub))


def _occupation_factorial(occ) -> int:
    f = 1
    for n in occ:
        f *= _FACTORIALS[n]
    return f


def _repeat_modes(occ) -> list[int]:
    out: list[int] = []
    for mode, n in enumerate(occ):
        out.extend([mode] * n)
    return out


def apply(u: InterferometerUnitary, s: StateVector) -> StateVector:
    """Transform a state through an interferometer.

    Photon number is conserved exactly: the transformation is block
    diagonal over photon-number sectors, and each output sector is
    enumerated in full. Norm is preserved to float precision.
    """
    if u.dim != s.modes:
        raise ModeMismatch(f"unitary on {u.dim} modes, state on {s.modes}")
    by_sector: dict[int, list[tuple]] = {}
    for occ, amp in s.amps.items():
        by_sector.setdefault(sum(occ), []).append((occ, amp))

    matrix = u.matrix
    out: dict[tuple[int, ...], complex] = {}
    for photons, entries in by_sector.items():
        # Cannot exceed the cutoff for a passive unitary with valid input.
        assert photons <= s.cutoff
        inputs = [
            (_repeat_modes(occ), amp / math.sqrt(_occupation_factorial(occ)))
            for occ, amp in entries
        ]
        for out_occ in sector_occupations(photons, s.modes):
            rows = _repeat_modes(out_occ)
            acc = 0j
            for cols, weighted_amp in inputs:
                acc += weighted_amp * _repeated_permanent(matrix, rows, cols)
            if acc != 0j:
                out[out_occ] = acc / math.sqrt(_occupation_factorial(out_occ))
    return StateVector(s.modes, out, s.cutoff)

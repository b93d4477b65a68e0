"""Parameter grids over input pairs and deterministic result tables.

Grid semantics: four ranges (p1, p2, phase1, phase2) walked in row-major
order with p1 outermost and phase2 innermost. ``diagonal`` collapses the
grid to identical inputs, iterating (p1, phase1) and copying them to the
second input; that is how the closed-form success curve is traced.

CSV output is byte-deterministic: fixed column order, fixed number
formatting (12 significant digits, lowercase scientific below 1e-4, bare
"0" for zero), LF newlines. Points are independent pure evaluations, so
any execution order must produce the same bytes; emission follows grid
order regardless.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .errors import ConfigInvalid
from .fock import DEFAULT_CUTOFF, input_from_probability
from .scheme import SchemeResult, run_scheme

CSV_HEADER = "p1,p2,phase1,phase2,theta,phi,p_success,fidelity,degenerate"

#: Numeric row fields, in CSV column order.
_NUMERIC_FIELDS = (
    "p1",
    "p2",
    "phase1",
    "phase2",
    "theta",
    "phi",
    "p_success",
    "fidelity",
)

OUTPUT_FORMATS = ("table", "csv", "json")


@dataclass(frozen=True)
class RangeSpec:
    """Inclusive linear range with a fixed point count."""

    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.steps < 1:
            raise ConfigInvalid(f"steps must be >= 1, got {self.steps}")
        if self.start > self.stop:
            raise ConfigInvalid(f"range start {self.start} exceeds stop {self.stop}")

    def points(self) -> tuple[float, ...]:
        if self.steps == 1:
            return (float(self.start),)
        return tuple(float(x) for x in np.linspace(self.start, self.stop, self.steps))


def fixed(value: float) -> RangeSpec:
    """Single-point range pinning a parameter to one value."""
    return RangeSpec(value, value, 1)


@dataclass(frozen=True)
class RunConfig:
    """One scheme evaluation: two inputs, cutoff, output format."""

    p1: float
    p2: float
    phase1: float = 0.0
    phase2: float = 0.0
    cutoff: int = DEFAULT_CUTOFF
    output_format: str = "table"

    def __post_init__(self):
        for name in ("p1", "p2"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ConfigInvalid(f"{name} must lie in [0, 1], got {v!r}")
        if self.cutoff < 2:
            raise ConfigInvalid(f"cutoff must be >= 2, got {self.cutoff}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigInvalid(f"unknown format {self.output_format!r}")


@dataclass(frozen=True)
class SweepConfig:
    """Grid over input parameters plus output destinations."""

    p1: RangeSpec
    p2: RangeSpec
    phase1: RangeSpec = field(default_factory=lambda: fixed(0.0))
    phase2: RangeSpec = field(default_factory=lambda: fixed(0.0))
    diagonal: bool = False
    cutoff: int = DEFAULT_CUTOFF
    output_format: str = "csv"
    out: str | None = None
    plot: str | None = None

    def __post_init__(self):
        for name in ("p1", "p2"):
            r = getattr(self, name)
            if not (0.0 <= r.start and r.stop <= 1.0):
                raise ConfigInvalid(f"{name} range [{r.start}, {r.stop}] leaves [0, 1]")
        if self.cutoff < 2:
            raise ConfigInvalid(f"cutoff must be >= 2, got {self.cutoff}")
        if self.output_format not in ("csv", "json"):
            raise ConfigInvalid(f"sweep format must be csv or json, got {self.output_format!r}")


def grid_points(cfg: SweepConfig) -> Iterator[tuple[float, float, float, float]]:
    """Row-major grid order; the diagonal copies input 1 onto input 2."""
    if cfg.diagonal:
        for p in cfg.p1.points():
            for ph in cfg.phase1.points():
                yield p, p, ph, ph
        return
    for p1 in cfg.p1.points():
        for p2 in cfg.p2.points():
            for ph1 in cfg.phase1.points():
                for ph2 in cfg.phase2.points():
                    yield p1, p2, ph1, ph2


def run_point(
    p1: float, p2: float, phase1: float, phase2: float, cutoff: int = DEFAULT_CUTOFF
) -> SchemeResult:
    """Evaluate the scheme at one grid point."""
    return run_scheme(
        input_from_probability(p1, phase1),
        input_from_probability(p2, phase2),
        cutoff=cutoff,
    )


def result_row(
    p1: float, p2: float, phase1: float, phase2: float, result: SchemeResult
) -> dict:
    """Flat row for one grid point, keys matching the CSV header."""
    return {
        "p1": p1,
        "p2": p2,
        "phase1": phase1,
        "phase2": phase2,
        "theta": result.lambda1.theta,
        "phi": result.lambda1.phi,
        "p_success": result.p_success,
        "fidelity": result.output_fidelity,
        "degenerate": result.degenerate,
    }


def sweep_rows(cfg: SweepConfig) -> list[dict]:
    """Evaluate the whole grid in deterministic order."""
    return [
        result_row(p1, p2, ph1, ph2, run_point(p1, p2, ph1, ph2, cfg.cutoff))
        for p1, p2, ph1, ph2 in grid_points(cfg)
    ]


def fmt(x: float) -> str:
    """Deterministic decimal form: 12 significant digits, lowercase
    scientific below 1e-4, plain 0 for zero."""
    if x == 0:
        return "0"
    if abs(x) < 1e-4:
        return f"{x:.11e}"
    return f"{x:.12g}"


def rows_to_csv(rows: list[dict]) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        cells = [fmt(float(row[name])) for name in _NUMERIC_FIELDS]
        cells.append("true" if row["degenerate"] else "false")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def rows_to_json(rows: list[dict]) -> str:
    return json.dumps(rows, indent=2) + "\n"

"""Timing comparison for the permanent kernels.

Times every importable kernel (compiled and pure Python) on random
complex matrices across a range of dimensions, then times a full
parameter sweep under the currently selected backend. Run as a script:

    python3 benchmarks/bench_permanent.py --dims 2 10 --seed 0
"""

import argparse
import time

import numpy as np

from photonpurify._kernels import BACKEND, backends
from photonpurify.sweep import RangeSpec, SweepConfig, sweep_rows


def best_of(fn, arg, repeats: int, rounds: int = 3) -> float:
    """Best per-call time over a few measurement rounds."""
    best = float("inf")
    for _ in range(rounds):
        start = time.perf_counter()
        for _ in range(repeats):
            fn(arg)
        best = min(best, (time.perf_counter() - start) / repeats)
    return best


def calibrated_repeats(fn, arg, target: float = 0.05) -> int:
    start = time.perf_counter()
    fn(arg)
    once = time.perf_counter() - start
    return max(3, min(20000, int(target / max(once, 1e-9))))


def bench_kernels(lo: int, hi: int, seed: int) -> None:
    rng = np.random.default_rng(seed)
    kernels = backends()
    names = sorted(kernels)
    header = "dim " + " ".join(f"{name:>12}" for name in names)
    if len(names) == 2:
        header += f" {'ratio':>8}"
    print(header)
    for dim in range(lo, hi + 1):
        m = np.ascontiguousarray(
            (rng.uniform(-1, 1, (dim, dim)) + 1j * rng.uniform(-1, 1, (dim, dim)))
            / np.sqrt(2)
        )
        times = {}
        for name in names:
            fn = kernels[name]
            times[name] = best_of(fn, m, calibrated_repeats(fn, m))
        cells = " ".join(f"{times[name] * 1e6:>10.2f}us" for name in names)
        line = f"{dim:>3} {cells}"
        if len(names) == 2:
            slow, fast = max(times.values()), min(times.values())
            line += f" {slow / fast:>7.1f}x"
        print(line)


def bench_sweep() -> None:
    cfg = SweepConfig(p1=RangeSpec(0.0, 1.0, 21), p2=RangeSpec(0.0, 1.0, 21))
    start = time.perf_counter()
    rows = sweep_rows(cfg)
    elapsed = time.perf_counter() - start
    print(f"\n21x21 sweep under backend {BACKEND!r}: "
          f"{elapsed:.2f}s total, {elapsed / len(rows) * 1e3:.2f}ms per point")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dims", nargs=2, type=int, default=(2, 10),
                        metavar=("LO", "HI"), help="dimension range, inclusive")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--skip-sweep", action="store_true",
                        help="kernel table only")
    args = parser.parse_args()
    print(f"available backends: {sorted(backends())}, selected: {BACKEND}")
    bench_kernels(args.dims[0], args.dims[1], args.seed)
    if not args.skip_sweep:
        bench_sweep()


if __name__ == "__main__":
    main()

"""Time the trial-accumulation kernels: compiled extension vs pure python.

Both kernels walk the same draw array and must return bit-identical
results; this script checks that first, then reports wall time and
throughput for each backend over a few workload sizes.

Run:  python3 benchmarks/bench_kernels.py [--trials N ...] [--buttons K]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from vrmenu._kernels import BACKEND, pure

try:
    from vrmenu._kernels import _native
except ImportError:
    _native = None


def run_once(kernel, times: np.ndarray, draws: np.ndarray) -> tuple[float, float]:
    started = time.perf_counter()
    total, hits = kernel(times, draws, 0.0)
    elapsed = time.perf_counter() - started
    assert int(hits.sum()) == len(draws)
    return total, elapsed


def best_of(kernel, times, draws, repeats: int) -> tuple[float, float]:
    total, best = run_once(kernel, times, draws)
    for _ in range(repeats - 1):
        check, elapsed = run_once(kernel, times, draws)
        assert check == total
        best = min(best, elapsed)
    return total, best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--trials", type=int, nargs="+", default=[10_000, 100_000, 1_000_000, 5_000_000]
    )
    parser.add_argument("--buttons", type=int, default=9)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    times = rng.uniform(0.1, 3.0, size=args.buttons)
    print(f"selected backend at import: {BACKEND}")
    print(f"{'trials':>10}  {'pure':>12}  {'native':>12}  {'speedup':>8}")
    for trials in args.trials:
        draws = rng.integers(0, args.buttons, size=trials, dtype=np.int64)
        pure_total, pure_time = best_of(pure.accumulate_trials, times, draws, args.repeats)
        row = f"{trials:>10}  {pure_time * 1e3:>10.2f}ms"
        if _native is not None:
            native_total, native_time = best_of(
                _native.accumulate_trials, times, draws, args.repeats
            )
            assert native_total == pure_total, "backends disagree"
            row += f"  {native_time * 1e3:>10.2f}ms  {pure_time / native_time:>7.1f}x"
        else:
            row += f"  {'n/a':>12}  {'n/a':>8}"
        print(row)


if __name__ == "__main__":
    main()

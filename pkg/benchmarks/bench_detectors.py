"""Time the numba and pure-numpy backends of both detector kernels.

Usage:
    python benchmarks/bench_detectors.py [--samples 1000000] [--repeat 3]

Runs each backend on the same fixed-seed packed tables at n = 4, 5, 6 and
prints per-scan wall times with the numba/numpy speedup. Run without
CANALIZER_BACKEND set so both backends are importable.
"""

import argparse
import time

import numpy as np

from canalizer import kernels


def sample(n, count, seed=20101):
    rng = np.random.default_rng(seed + n)
    if n <= 4:
        return kernels.all_packed(n)
    if n == 5:
        return rng.integers(0, 1 << 32, size=count, dtype=np.uint64)
    hi = rng.integers(0, 1 << 32, size=count, dtype=np.uint64)
    lo = rng.integers(0, 1 << 32, size=count, dtype=np.uint64)
    return (hi << np.uint64(32)) | lo


def best_time(fn, funcs, n, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(funcs, n)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=1_000_000,
                        help="sample count for n = 5, 6 (n = 4 is exhaustive)")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [("numpy", kernels.oracle_masks_numpy, kernels.kmap_masks_numpy)]
    if kernels.NUMBA_AVAILABLE:
        backends.insert(0, ("numba", kernels.oracle_masks_numba, kernels.kmap_masks_numba))
        # warm the JIT outside the timed region
        probe = np.arange(64, dtype=np.uint64)
        for n in (4, 5, 6):
            kernels.oracle_masks_numba(probe, n)
            kernels.kmap_masks_numba(probe, n)
    else:
        print("numba backend unavailable; timing numpy only")

    print(f"{'kernel':<18}{'n':>3}{'tables':>10}", end="")
    for name, _, _ in backends:
        print(f"{name + ' (s)':>14}", end="")
    if len(backends) == 2:
        print(f"{'speedup':>10}", end="")
    print()

    for kernel_name, idx in (("oracle", 1), ("kmap", 2)):
        for n in (4, 5, 6):
            funcs = sample(n, args.samples)
            row = []
            for entry in backends:
                row.append(best_time(entry[idx], funcs, n, args.repeat))
            print(f"{kernel_name:<18}{n:>3}{funcs.size:>10}", end="")
            for t in row:
                print(f"{t:>14.3f}", end="")
            if len(row) == 2:
                print(f"{row[1] / row[0]:>9.1f}x", end="")
            print()


if __name__ == "__main__":
    main()

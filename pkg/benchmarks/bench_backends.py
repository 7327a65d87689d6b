#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Loads both backend modules side by side (ignoring the import-time
selection) and times the two hot paths: batched eigensolves and the
vertex-pattern scan.  Results are wall-clock medians of repeated runs.

Usage: python benchmarks/bench_backends.py [--quick]
"""

import argparse
import statistics
import time

import numpy as np

from spreadmax import _pure

try:
    from spreadmax import _native
except ImportError:
    _native = None


def median_time(fn, repeats):
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def random_batch(rng, count, n):
    raw = rng.uniform(-5.0, 5.0, size=(count, n, n))
    return (raw + raw.transpose(0, 2, 1)) / 2.0


def row(label, pure_s, native_s):
    if native_s is None:
        print(f"{label:<34} {pure_s * 1e3:>10.2f} ms {'n/a':>12}")
    else:
        print(
            f"{label:<34} {pure_s * 1e3:>10.2f} ms {native_s * 1e3:>9.2f} ms "
            f"{pure_s / native_s:>8.1f}x"
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    repeats = 3
    batch = 200 if args.quick else 1000
    rng = np.random.default_rng(2024)

    print(f"{'workload':<34} {'pure':>13} {'native':>12} {'speedup':>8}")
    for n in (4, 6, 8):
        mats = random_batch(rng, batch, n)
        pure_s = median_time(lambda: _pure.spread_batch(mats), repeats)
        native_s = (
            median_time(lambda: _native.spread_batch(mats), repeats)
            if _native
            else None
        )
        row(f"spread_batch n={n} x{batch}", pure_s, native_s)

    search_n = 4 if args.quick else 5
    m = search_n * (search_n + 1) // 2
    total = 1 << m
    pure_s = median_time(
        lambda: _pure.search_chunk(search_n, 0.0, 1.0, 0, total, True, 1e-9), repeats
    )
    native_s = (
        median_time(
            lambda: _native.search_chunk(search_n, 0.0, 1.0, 0, total, True, 1e-9),
            repeats,
        )
        if _native
        else None
    )
    row(f"vertex scan n={search_n} ({total} patterns)", pure_s, native_s)

    if _native is None:
        print("\ncompiled extension not built; only the pure backend was timed")


if __name__ == "__main__":
    main()

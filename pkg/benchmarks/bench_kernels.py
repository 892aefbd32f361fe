#!/usr/bin/env python3
"""Benchmark the compiled polynomial-product kernel against the pure fallback.

Times the capped term-map product (the engine's hot loop) on three kinds of
workload, then optionally times the full verification suite end to end under
each backend in subprocesses (the backend is chosen at import).

    python3 benchmarks/bench_kernels.py            # kernel microbenchmarks
    python3 benchmarks/bench_kernels.py --suite    # plus end-to-end suite runs
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from qhahn._accel import _polymul_py

try:
    from qhahn._accel import _polymul_c
except ImportError:
    _polymul_c = None


def dense_bivariate(degree: int) -> dict:
    rng = random.Random(degree)
    return {
        (i, j, 0, 0, 0, 0): Fraction(rng.randint(-99, 99), rng.randint(1, 30))
        for i in range(degree + 1)
        for j in range(degree + 1)
    }


def series_like(cap: int) -> dict:
    """Shape of a truncated generating function: x,y degrees tied to t."""
    rng = random.Random(cap)
    terms = {}
    for n in range(cap + 1):
        for i in range(n + 1):
            terms[(i, n - i, 0, 0, n, 0)] = Fraction(
                rng.randint(-99, 99), rng.randint(1, 30)
            )
    return terms


def bilinear_like(cap: int) -> dict:
    """Four-variable coefficients, as in the bilinear diagonal sums."""
    rng = random.Random(cap)
    terms = {}
    for n in range(cap + 1):
        for i in range(0, n + 1, 2):
            for j in range(0, n + 1, 2):
                terms[(i, n - i, j, n - j, n, 0)] = Fraction(
                    rng.randint(-99, 99), rng.randint(1, 30)
                )
    return terms


def time_kernel(kernel, a, b, cap_t, cap_s, repeats=3) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        kernel(a, b, cap_t, cap_s)
        best = min(best, time.perf_counter() - start)
    return best


def run_micro() -> None:
    workloads = [
        ("dense bivariate, degree 12", dense_bivariate(12), dense_bivariate(12), -1, -1),
        ("dense bivariate, degree 20", dense_bivariate(20), dense_bivariate(20), -1, -1),
        ("series product, caps 12", series_like(12), series_like(12), 12, 12),
        ("series product, caps 20", series_like(20), series_like(20), 20, 20),
        ("bilinear product, caps 10", bilinear_like(10), bilinear_like(10), 10, 10),
        ("bilinear product, caps 14", bilinear_like(14), bilinear_like(14), 14, 14),
    ]
    print(f"{'workload':32s} {'pure (ms)':>10s} {'compiled (ms)':>14s} {'speedup':>8s}")
    for label, a, b, cap_t, cap_s in workloads:
        pure = time_kernel(_polymul_py.poly_mul_capped, a, b, cap_t, cap_s)
        if _polymul_c is None:
            print(f"{label:32s} {pure * 1000:10.1f} {'n/a':>14s} {'n/a':>8s}")
            continue
        fast = time_kernel(_polymul_c.poly_mul_capped, a, b, cap_t, cap_s)
        assert _polymul_c.poly_mul_capped(a, b, cap_t, cap_s) == (
            _polymul_py.poly_mul_capped(a, b, cap_t, cap_s)
        )
        print(
            f"{label:32s} {pure * 1000:10.1f} {fast * 1000:14.1f} "
            f"{pure / fast:7.1f}x"
        )


def run_suite_comparison() -> None:
    print("\nfull verification suite, both parameter sets:")
    sys.stdout.flush()
    script = (
        "import time; from qhahn._accel import BACKEND; "
        "from qhahn.verify import run_suite; "
        "t0 = time.perf_counter(); run_suite(); "
        "print(f'{BACKEND} backend: {time.perf_counter() - t0:.2f}s')"
    )
    for pure in ("0", "1"):
        env = dict(os.environ, QHAHN_PURE_PYTHON=pure)
        if pure == "0":
            env.pop("QHAHN_PURE_PYTHON")
        subprocess.run([sys.executable, "-c", script], env=env, check=True)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--suite", action="store_true", help="also time the full suite per backend"
    )
    args = parser.parse_args()
    if _polymul_c is None:
        print("note: compiled kernel not built; showing pure timings only")
    run_micro()
    if args.suite:
        run_suite_comparison()


if __name__ == "__main__":
    main()

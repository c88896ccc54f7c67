#!/usr/bin/env python3
"""Benchmark the compiled simplex pivot kernel against the pure-Python one.

Times end-to-end feasibility solves (the package hot path) with each kernel
swapped into conescore.lp, over batches of random problems of growing size,
and cross-checks that the results are identical.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

from conescore import FeasibilityProblem, lp
from conescore import _simplex_py

try:
    from conescore import _simplex
except ImportError:
    _simplex = None


def batch(rng, m, n, count):
    problems = []
    for _ in range(count):
        M = rng.standard_normal((m, n))
        # half feasible targets (inside the cone), half arbitrary
        if rng.random() < 0.5:
            c = rng.random(m) @ M
        else:
            c = rng.standard_normal(n)
        problems.append(FeasibilityProblem(M=M, target=c))
    return problems


def run(kernel, problems):
    lp.pivot_loop = kernel
    t0 = time.perf_counter()
    results = [lp.solve_feasibility(p) for p in problems]
    return time.perf_counter() - t0, results


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    if _simplex is None:
        print("compiled kernel not available; nothing to compare")
        return

    rng = np.random.default_rng(12345)
    print(f"{'size (m x n)':>14} {'count':>6} {'compiled':>10} {'python':>10} {'speedup':>8}")
    for m, n, count in [(5, 3, 400), (10, 6, 300), (20, 12, 200), (40, 25, 100), (80, 50, 40)]:
        problems = batch(rng, m, n, count)
        tc = min(run(_simplex.pivot_loop, problems)[0] for _ in range(args.repeats))
        tc_res = run(_simplex.pivot_loop, problems)[1]
        tp = min(run(_simplex_py.pivot_loop, problems)[0] for _ in range(args.repeats))
        tp_res = run(_simplex_py.pivot_loop, problems)[1]
        assert [r.feasible for r in tc_res] == [r.feasible for r in tp_res]
        print(f"{f'{m} x {n}':>14} {count:>6} {tc:>9.4f}s {tp:>9.4f}s {tp / tc:>7.2f}x")


if __name__ == "__main__":
    main()

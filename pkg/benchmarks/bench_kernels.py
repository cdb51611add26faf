#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernel against the pure-Python one.

The hot loop of every polynomial in this package is the same kernel:
backtracking over linear extensions while maintaining descent counters
for a batch of labelings.  This script times that kernel on workloads
shaped like the real ones (canon sums and edge-subset sweeps) for both
backends and prints the speedup.

Usage: python3 benchmarks/bench_kernels.py
"""

import time
from itertools import permutations

from canonlab import _pykernel
from canonlab.poset import Labeling, canon_labeling, chain, product_with_chain, remove_intercopy_covers

try:
    from canonlab import _ckernel
except ImportError:
    _ckernel = None


def canon_sum_workload(m, n):
    """All n! canon labelings of the m x n grid."""
    grid = product_with_chain(chain(m), n)
    labs = [
        canon_labeling(Labeling.natural(m), Labeling(sig)).values
        for sig in permutations(range(1, n + 1))
    ]
    return grid.element_count, sorted(grid.covers), labs


def loose_sweep_workload(m, n):
    """The worst subset of the (m, n) sweep: every inter-copy cover removed."""
    grid = product_with_chain(chain(m), n)
    removed = [(row, j) for row in range(1, m + 1) for j in range(1, n)]
    q = remove_intercopy_covers(grid, m, removed)
    labs = [
        canon_labeling(Labeling.natural(m), Labeling(sig)).values
        for sig in permutations(range(1, n + 1))
    ]
    return q.element_count, sorted(q.covers), labs


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    workloads = [
        ("canon sum on [2]x[6], 720 labelings", canon_sum_workload(2, 6)),
        ("canon sum on [3]x[4], 24 labelings", canon_sum_workload(3, 4)),
        ("loose sweep subset at (2,4), 24 labelings", loose_sweep_workload(2, 4)),
        ("loose sweep subset at (2,5), 120 labelings", loose_sweep_workload(2, 5)),
    ]
    print(f"{'workload':<45} {'python':>10} {'cython':>10} {'speedup':>9}")
    for name, (n, covers, labs) in workloads:
        t_py, h_py = timed(_pykernel.descent_histograms, n, covers, labs)
        if _ckernel is None:
            print(f"{name:<45} {t_py * 1e3:>8.1f}ms {'n/a':>10} {'n/a':>9}")
            continue
        t_c, h_c = timed(_ckernel.descent_histograms, n, covers, labs)
        assert h_py == h_c, "backends disagree"
        print(
            f"{name:<45} {t_py * 1e3:>8.1f}ms {t_c * 1e3:>8.1f}ms {t_py / t_c:>8.1f}x"
        )
    if _ckernel is None:
        print("compiled kernel not built; install with a C compiler to compare")


if __name__ == "__main__":
    main()

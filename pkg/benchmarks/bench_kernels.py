#!/usr/bin/env python3
"""Time the numba kernels against the pure-numpy fallbacks.

Workloads mirror where the package actually spends time: all-sources BFS
eccentricity scans (diameter/center work at scale) and the all-pairs
path-intersection scan (brute-force verification).

    python3 benchmarks/bench_kernels.py [--n 10] [--brute-n 7] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from aqcist import construct_cists
from aqcist.kernels import csr_from_edges, get_backend


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def tree_csr(n: int, index: int = 0):
    tree = construct_cists(n).trees[index]
    edges = np.array(tree.edges, dtype=np.int64)
    return csr_from_edges(2**n, edges)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=10,
                        help="dimension for the eccentricity-scan workload")
    parser.add_argument("--brute-n", type=int, default=7,
                        help="dimension for the path-conflict-scan workload")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    try:
        numba = get_backend("numba")
    except ImportError:
        print("numba unavailable; nothing to compare")
        return 1
    numpy_ = get_backend("numpy")

    indptr, indices = tree_csr(args.n)
    fam = construct_cists(args.brute_n)
    csr_a = csr_from_edges(2**args.brute_n, np.array(fam.trees[0].edges, dtype=np.int64))
    csr_b = csr_from_edges(2**args.brute_n, np.array(fam.trees[1].edges, dtype=np.int64))

    # warm up JIT outside the timings
    numba.all_eccentricities(indptr, indices)
    pa = numba.all_parents(*csr_a)
    pb = numba.all_parents(*csr_b)
    numba.path_conflict_scan(pa, pb)

    rows = []
    workloads = [
        (f"all_eccentricities  AQ_{args.n} tree ({2**args.n} vertices)",
         lambda b: b.all_eccentricities(indptr, indices)),
        (f"all_parents         AQ_{args.brute_n} tree ({2**args.brute_n} vertices)",
         lambda b: b.all_parents(*csr_a)),
        (f"path_conflict_scan  AQ_{args.brute_n} tree pair "
         f"({2**args.brute_n * (2**args.brute_n - 1) // 2} vertex pairs)",
         lambda b: b.path_conflict_scan(pa, pb)),
    ]
    for label, fn in workloads:
        t_nb = best_of(lambda: fn(numba), args.repeat)
        t_np = best_of(lambda: fn(numpy_), args.repeat)
        rows.append((label, t_nb, t_np))

    print(f"{'workload':<58} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for label, t_nb, t_np in rows:
        print(f"{label:<58} {t_nb * 1e3:>8.2f}ms {t_np * 1e3:>8.2f}ms {t_np / t_nb:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

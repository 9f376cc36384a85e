"""Benchmark the numba kernels against the pure-numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np


def build_cases():
    from parklc.multigraph import complete_graph
    from parklc.parking import _dtab

    k6 = complete_graph(6)
    eu = np.array([e[0] for e in k6.edges], dtype=np.int64)
    ev = np.array([e[1] for e in k6.edges], dtype=np.int64)

    k5 = complete_graph(5)
    maxvals = np.array([k5.degree(i) for i in range(1, 5)], dtype=np.int64)
    dtab = _dtab(k5, 4)

    rng = np.random.default_rng(7)
    adj = rng.integers(0, 3, size=(8, 8), dtype=np.int64)
    adj = adj + adj.T

    nmax = int(np.prod(maxvals))
    return [
        ("parking n=7", "parking_sum_hist", (7, 0, 7 ** 7)),
        ("gparking K5", "gparking_sum_hist", (maxvals, dtab, 0, nmax)),
        ("trees n=8", "tree_inversion_hist", (8, 0, 8 ** 6)),
        ("connected n=6", "connected_count_hist", (eu, ev, 6, 0, 2 ** 15)),
        ("rank pairs K6", "corank_nullity_counts", (eu, ev, 6, 5, 0, 2 ** 15)),
        ("canonical 8x8", "canonical_adj_min", (adj,)),
    ]


def bench(fn, args, repeat):
    fn(*args)  # warm the jit cache before timing
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    from parklc.kernels import numpy_backend

    try:
        from parklc.kernels import numba_backend
    except ImportError:
        numba_backend = None

    cases = build_cases()
    width = max(len(label) for label, _, _ in cases)
    header = f"{'case':<{width}}  {'numpy':>10}  {'numba':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, name, fnargs in cases:
        t_np = bench(getattr(numpy_backend, name), fnargs, args.repeat)
        if numba_backend is None:
            print(f"{label:<{width}}  {t_np:>9.4f}s  {'n/a':>10}  {'n/a':>8}")
            continue
        t_nb = bench(getattr(numba_backend, name), fnargs, args.repeat)
        a = numpy_backend
        b = numba_backend
        same = np.array_equal(getattr(a, name)(*fnargs), getattr(b, name)(*fnargs))
        ratio = t_np / t_nb if t_nb > 0 else float("inf")
        flag = "" if same else "  MISMATCH"
        print(f"{label:<{width}}  {t_np:>9.4f}s  {t_nb:>9.4f}s  {ratio:>7.1f}x{flag}")


if __name__ == "__main__":
    main()

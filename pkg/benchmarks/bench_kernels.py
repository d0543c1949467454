"""Timing comparison of the two enumeration-kernel backends.

Runs stable_type_counts and edge_subset_type_counts on a few tree shapes with
both the pure-Python and the numba backend (when available), checks that the
count vectors agree, and prints a small table with best-of-N timings.

Usage:
    python benchmarks/bench_kernels.py [--stable-n 12] [--subset-n 17] [--repeat 3]
"""

import argparse
import time

from csftrees._kernels import (
    BACKEND,
    edge_subset_type_counts,
    stable_type_counts,
    warmup,
)
from csftrees.generators import gen_path, gen_star
from csftrees.graphs import Graph, as_tree


def comb(n: int):
    """Caterpillar: a spine of ceil(n/2) vertices with a tooth on each."""
    spine = (n + 1) // 2
    edges = [(i, i + 1) for i in range(spine - 1)]
    edges += [(i, spine + i) for i in range(n - spine)]
    return as_tree(Graph(n, tuple(edges)))


def shapes(n: int):
    return (
        ("path", gen_path(n).graph),
        ("star", gen_star(n).graph),
        ("comb", comb(n).graph),
    )


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(kernel, name: str, graphs, repeat: int, rows: list) -> None:
    for shape, g in graphs:
        t_py = best_of(lambda: kernel(g.n, g.edges, backend="python"), repeat)
        if BACKEND == "numba":
            t_nb = best_of(lambda: kernel(g.n, g.edges, backend="numba"), repeat)
            a = kernel(g.n, g.edges, backend="python")
            b = kernel(g.n, g.edges, backend="numba")
            assert (a == b).all(), f"backend mismatch on {name}/{shape}"
            rows.append((name, shape, g.n, t_py, t_nb, t_py / t_nb))
        else:
            rows.append((name, shape, g.n, t_py, None, None))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--stable-n", type=int, default=12, help="tree size for the stable-partition kernel")
    ap.add_argument("--subset-n", type=int, default=17, help="tree size for the edge-subset kernel")
    ap.add_argument("--repeat", type=int, default=3, help="take the best of this many runs")
    args = ap.parse_args()

    if BACKEND == "numba":
        t0 = time.perf_counter()
        warmup()
        print(f"numba warmup: {time.perf_counter() - t0:.2f}s")
    else:
        print("numba backend disabled or unavailable; timing the python path only")

    rows: list = []
    bench(stable_type_counts, "stable", shapes(args.stable_n), args.repeat, rows)
    bench(edge_subset_type_counts, "subset", shapes(args.subset_n), args.repeat, rows)

    print(f"{'kernel':<8}{'shape':<7}{'n':>4}{'python':>12}{'numba':>12}{'speedup':>10}")
    for name, shape, n, t_py, t_nb, speed in rows:
        nb = f"{t_nb:>11.4f}s" if t_nb is not None else f"{'-':>12}"
        sp = f"{speed:>9.1f}x" if speed is not None else f"{'-':>10}"
        print(f"{name:<8}{shape:<7}{n:>4}{t_py:>11.4f}s{nb}{sp}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Benchmark the jitted kernels against their numpy/python fallbacks.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

The same comparison is what the ZSIGRAPH_NO_NUMBA=1 environment flag trades
away: vectorized numpy replaces the BFS sweeps, and the flow kernel runs as
interpreted loops.
"""

import time

import numpy as np

from zsigraph import _kernels
from zsigraph.graphs import _flow_arcs
from zsigraph.linegraph import build_line_graph
from zsigraph.model import ModelConfig, build_gamma


def timed(fn, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return result, best


def bench_distances(g, name):
    jitted, t_nb = timed(
        lambda: _kernels._all_pairs_bfs_nb(g.n, g._indptr, g._indices))
    vectorized, t_np = timed(
        lambda: _kernels.all_pairs_distances_np(g.n, g._adj))
    assert np.array_equal(jitted, vectorized)
    report("all-pairs BFS", name, g, t_nb, t_np)


def bench_girth(g, name):
    jitted, t_nb = timed(lambda: _kernels._girth_nb(g.n, g._indptr, g._indices))
    vectorized, t_np = timed(lambda: _kernels.girth_np(g.n, g._adj))
    assert jitted == vectorized
    report("girth", name, g, t_nb, t_np)


def bench_cycle_table(g, name):
    nn, aptr, ato, arev, acost, cap0 = _flow_arcs(g)

    def table(two_paths):
        out = np.full((g.n, g.n), -1, dtype=np.int64)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                out[u, v] = two_paths(nn, aptr, ato, arev, acost, cap0,
                                      2 * u + 1, 2 * v)
        return out

    jitted, t_nb = timed(lambda: table(_kernels.two_paths_length_nb), repeats=2)
    plain, t_py = timed(lambda: table(_kernels.two_paths_length_py), repeats=1)
    assert np.array_equal(jitted, plain)
    report("cycle table (2-disjoint-path flow)", name, g, t_nb, t_py)


def report(kernel, name, g, t_fast, t_slow):
    print(f"{kernel:36s} {name:24s} "
          f"{g.n:5d} vertices {g.number_of_edges():6d} edges   "
          f"numba {t_fast * 1e3:9.2f} ms   fallback {t_slow * 1e3:9.2f} ms   "
          f"speedup {t_slow / t_fast:7.1f}x")


def main():
    if not _kernels.NUMBA_ENABLED:
        print("numba backend unavailable (is ZSIGRAPH_NO_NUMBA set?); "
              "nothing to compare")
        return

    gamma43 = build_gamma(ModelConfig(4, 3))
    line43 = build_line_graph(gamma43).graph
    line33 = build_line_graph(build_gamma(ModelConfig(3, 3))).graph
    line32 = build_line_graph(build_gamma(ModelConfig(3, 2))).graph

    # warm the compiles out of the timings
    _kernels._all_pairs_bfs_nb(line32.n, line32._indptr, line32._indices)
    _kernels._girth_nb(line32.n, line32._indptr, line32._indices)
    nn, aptr, ato, arev, acost, cap0 = _flow_arcs(line32)
    _kernels.two_paths_length_nb(nn, aptr, ato, arev, acost, cap0, 1, 2)

    print("kernel                               graph                    "
          "size                     numba          fallback        speedup")
    bench_distances(line43, "L(Gamma(n=4,m=3))")
    bench_distances(line33, "L(Gamma(n=3,m=3))")
    bench_girth(line43, "L(Gamma(n=4,m=3))")
    bench_girth(line33, "L(Gamma(n=3,m=3))")
    bench_cycle_table(line32, "L(Gamma(n=3,m=2))")
    bench_cycle_table(gamma43, "Gamma(n=4,m=3)")


if __name__ == "__main__":
    main()

"""Agreement between the fast algorithms and the enumeration oracles,
plus backend equivalence for the jitted kernels."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zsigraph import _kernels
from zsigraph.graphs import (Graph, INF, cycle_through_pair_length, girth,
                             is_chordal, naive_chordal,
                             naive_cycle_through_pair, naive_girth)
from zsigraph.model import ModelConfig, build_gamma


def cycle_graph(k):
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def random_graph(rng, n, p):
    upper = rng.rand(n, n) < p
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                     if upper[i, j]])


def test_oracle_caps():
    big = Graph(15, [])
    with pytest.raises(ValueError):
        naive_girth(big)
    with pytest.raises(ValueError):
        naive_chordal(big)
    with pytest.raises(ValueError):
        naive_cycle_through_pair(big, 0, 1)


def test_oracle_trivial_cases():
    tri = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert naive_girth(tri) == 3
    c4 = cycle_graph(4)
    assert naive_cycle_through_pair(c4, 0, 2) == 4
    assert naive_chordal(cycle_graph(5)) is False
    assert naive_chordal(tri) is True
    assert naive_girth(Graph(4, [(0, 1), (2, 3)])) == INF


def small_model_graphs():
    """Every model graph with at most 14 vertices."""
    out = []
    for n in (2, 3, 4):
        for m in (1, 2, 3, 4):
            for z in (False, True):
                cfg = ModelConfig(n, m, z)
                if cfg.vertex_count <= 14:
                    out.append((cfg, build_gamma(cfg)))
    return out


def test_fast_algorithms_agree_with_oracles_on_model_graphs():
    for cfg, g in small_model_graphs():
        assert girth(g) == naive_girth(g), cfg
        assert is_chordal(g)[0] == naive_chordal(g), cfg
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert (cycle_through_pair_length(g, u, v)
                        == naive_cycle_through_pair(g, u, v)), (cfg, u, v)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(3, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    return Graph(n, picks)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_girth_matches_oracle(g):
    assert girth(g) == naive_girth(g)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_chordal_matches_oracle(g):
    assert is_chordal(g)[0] == naive_chordal(g)


@given(graphs(max_n=7))
@settings(max_examples=40, deadline=None)
def test_cycle_through_pair_matches_oracle(g):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert (cycle_through_pair_length(g, u, v)
                    == naive_cycle_through_pair(g, u, v))


# -- backend equivalence --------------------------------------------------------


def equivalence_corpus():
    rng = np.random.RandomState(7)
    graphs = [build_gamma(ModelConfig(3, 2)), build_gamma(ModelConfig(4, 1)),
              cycle_graph(6), Graph(5, [])]
    graphs += [random_graph(rng, n, p) for n in (5, 8, 11) for p in (0.25, 0.6)]
    return graphs


def test_numpy_fallback_matches_loop_distances():
    for g in equivalence_corpus():
        loops = _kernels._all_pairs_bfs_loops(g.n, g._indptr, g._indices)
        vectorized = _kernels.all_pairs_distances_np(g.n, g._adj)
        assert np.array_equal(loops, vectorized)


def test_numpy_fallback_matches_loop_girth():
    for g in equivalence_corpus():
        assert (_kernels._girth_loops(g.n, g._indptr, g._indices)
                == _kernels.girth_np(g.n, g._adj))


@pytest.mark.skipif(not _kernels.NUMBA_ENABLED, reason="numba backend off")
def test_jitted_kernels_match_python_twins():
    from zsigraph.graphs import _flow_arcs

    for g in equivalence_corpus():
        assert np.array_equal(
            _kernels._all_pairs_bfs_nb(g.n, g._indptr, g._indices),
            _kernels._all_pairs_bfs_loops(g.n, g._indptr, g._indices))
        assert (_kernels._girth_nb(g.n, g._indptr, g._indices)
                == _kernels._girth_loops(g.n, g._indptr, g._indices))
        nn, aptr, ato, arev, acost, cap0 = _flow_arcs(g)
        for u in range(min(g.n, 6)):
            for v in range(u + 1, min(g.n, 6)):
                assert (_kernels.two_paths_length_nb(
                            nn, aptr, ato, arev, acost, cap0, 2 * u + 1, 2 * v)
                        == _kernels.two_paths_length_py(
                            nn, aptr, ato, arev, acost, cap0, 2 * u + 1, 2 * v))


def test_backend_flag_selects_numpy(tmp_path):
    import subprocess
    import sys

    code = "import zsigraph._kernels as k; print(k.BACKEND)"
    env_numpy = {"ZSIGRAPH_NO_NUMBA": "1", "PATH": "/usr/bin:/bin:/usr/local/bin"}
    out = subprocess.run([sys.executable, "-c", code], env=env_numpy,
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"

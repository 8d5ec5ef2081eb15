import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zsigraph.model import (FiniteSpace, FunctionVertex, ModelConfig, ZeroSet,
                            adjacent, build_gamma, complement_class,
                            enumerate_vertices, parse_vertex_label,
                            vertex_index)


def test_two_point_space_has_two_vertices():
    verts = enumerate_vertices(ModelConfig(2, 1))
    assert [v.label for v in verts] == ["0:1", "1:1"]


def test_three_point_space_three_copies_has_18_vertices():
    assert len(enumerate_vertices(ModelConfig(3, 3))) == 18


def test_zero_vertex_is_the_third_class_at_n2():
    verts = enumerate_vertices(ModelConfig(2, 1, include_zero=True))
    assert [v.label for v in verts] == ["0:1", "1:1", "0,1:1"]
    assert verts[-1].zero_set.is_full


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("include_zero", [False, True])
def test_vertex_count_formula(n, m, include_zero):
    config = ModelConfig(n, m, include_zero)
    assert len(enumerate_vertices(config)) == config.vertex_count
    assert config.vertex_count == (2 ** n - 2) * m + (1 if include_zero else 0)


def test_enumeration_order_is_bitmask_then_copy():
    verts = enumerate_vertices(ModelConfig(3, 2))
    masks = [v.zero_set.mask for v in verts]
    copies = [v.copy for v in verts]
    assert masks == sorted(masks)
    assert copies[:4] == [1, 2, 1, 2]
    for i, v in enumerate(verts):
        assert vertex_index(ModelConfig(3, 2), v.zero_set.mask, v.copy) == i


def test_adjacency_examples():
    z0 = ZeroSet(0b001, 3)
    z1 = ZeroSet(0b010, 3)
    z01 = ZeroSet(0b011, 3)
    z12 = ZeroSet(0b110, 3)
    assert not adjacent(FunctionVertex(z0, 1), FunctionVertex(z1, 1))
    assert adjacent(FunctionVertex(z0, 1), FunctionVertex(z0, 2))
    assert adjacent(FunctionVertex(z01, 1), FunctionVertex(z12, 1))
    # irreflexive even though the zero sets trivially meet
    assert not adjacent(FunctionVertex(z0, 1), FunctionVertex(z0, 1))


def test_adjacency_is_symmetric_and_class_determined():
    verts = enumerate_vertices(ModelConfig(3, 3))
    for u in verts:
        for v in verts:
            assert adjacent(u, v) == adjacent(v, u)
            if u != v:
                same_class = u.zero_set == v.zero_set
                expected = same_class or u.zero_set.intersects(v.zero_set)
                assert adjacent(u, v) == expected


def test_vertices_of_different_spaces_do_not_mix():
    u = FunctionVertex(ZeroSet(1, 2), 1)
    v = FunctionVertex(ZeroSet(1, 3), 1)
    with pytest.raises(ValueError):
        adjacent(u, v)


def test_config_validation():
    with pytest.raises(ValueError):
        ModelConfig(0, 1)
    with pytest.raises(ValueError):
        ModelConfig(2, 0)
    with pytest.raises(ValueError):
        FiniteSpace(0)
    with pytest.raises(ValueError):
        ZeroSet(0, 3)
    with pytest.raises(ValueError):
        ZeroSet(8, 3)
    with pytest.raises(ValueError):
        FunctionVertex(ZeroSet(1, 3), 0)


def test_only_zero_function_vanishes_everywhere():
    with pytest.raises(ValueError):
        FunctionVertex(ZeroSet(0b11, 2), 2)
    assert FunctionVertex(ZeroSet(0b11, 2), 1).label == "0,1:1"


def test_complement_class():
    assert complement_class(ZeroSet(0b001, 3)).members == (1, 2)
    assert complement_class(ZeroSet(0b011, 3)).members == (2,)
    assert complement_class(ZeroSet(0b111, 3)) is None


def test_build_gamma_counts():
    g = build_gamma(ModelConfig(3, 1))
    assert (g.n, g.number_of_edges()) == (6, 9)
    g2 = build_gamma(ModelConfig(2, 1))
    assert (g2.n, g2.number_of_edges()) == (2, 0)


def test_zero_vertex_is_universal():
    config = ModelConfig(2, 2, include_zero=True)
    g = build_gamma(config)
    zero = vertex_index(config, 0b11)
    assert all(g.has_edge(zero, v) for v in range(g.n) if v != zero)


def test_same_class_copies_form_a_clique():
    config = ModelConfig(3, 4)
    g = build_gamma(config)
    ids = [vertex_index(config, 0b101, k) for k in range(1, 5)]
    assert all(g.has_edge(u, v) for u in ids for v in ids if u != v)


def test_empty_model_for_singleton_space():
    assert build_gamma(ModelConfig(1, 3)).n == 0
    assert build_gamma(ModelConfig(1, 3, include_zero=True)).n == 1


def test_parse_vertex_label():
    assert parse_vertex_label("0,2:3", 3) == (0b101, 3)
    assert parse_vertex_label("1:1", 2) == (0b10, 1)
    with pytest.raises(ValueError):
        parse_vertex_label("5:1", 3)
    with pytest.raises(ValueError):
        parse_vertex_label("nonsense", 3)


def test_vertex_index_rejects_absent_zero_class():
    with pytest.raises(ValueError):
        vertex_index(ModelConfig(2, 2), 0b11)
    with pytest.raises(ValueError):
        vertex_index(ModelConfig(2, 2), 0b01, 3)


@given(n=st.integers(1, 5), m=st.integers(1, 4), z=st.booleans())
@settings(max_examples=40, deadline=None)
def test_build_matches_enumeration(n, m, z):
    config = ModelConfig(n, m, z)
    g = build_gamma(config)
    verts = enumerate_vertices(config)
    assert g.n == len(verts)
    assert list(g.labels) == [v.label for v in verts]
    # graph edges agree with the pairwise adjacency predicate
    expected = sum(
        1 for i in range(len(verts)) for j in range(i + 1, len(verts))
        if adjacent(verts[i], verts[j]))
    assert g.number_of_edges() == expected

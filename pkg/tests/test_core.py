import random

import pytest

from nmgraph.core import (GraphInputError, NMGraph, NMParams, ParseError,
                          dual_label, label_of, neighbors_with_label, parse,
                          permute_vertices, relabel, serialize)
from conftest import random_graph, random_params


def test_params_reject_degenerate():
    for n, m in [(0, 0), (0, 1)]:
        with pytest.raises(GraphInputError):
            NMParams(n, m)
    assert NMParams(1, 0).p == 2
    assert NMParams(2, 3).p == 7


def test_label_convention_arc():
    g = NMGraph(NMParams(1, 0), 2, arcs=[(0, 1, 1)])
    assert label_of(g, 0, 1) == 2
    assert label_of(g, 1, 0) == 1


def test_label_convention_edge():
    g = NMGraph(NMParams(1, 1), 4, edges=[(2, 3, 1)])
    assert label_of(g, 2, 3) == 3  # 2n + 1
    assert label_of(g, 3, 2) == 3
    assert label_of(g, 0, 1) is None


def test_label_of_rejects_bad_vertices():
    g = NMGraph(NMParams(1, 0), 2, arcs=[(0, 1, 1)])
    with pytest.raises(GraphInputError):
        label_of(g, 0, 5)
    with pytest.raises(GraphInputError):
        label_of(g, 1, 1)


def test_neighbors_with_label_star():
    g = NMGraph(NMParams(1, 0), 4, arcs=[(0, k, 1) for k in (1, 2, 3)])
    assert neighbors_with_label(g, 0, 2) == [1, 2, 3]
    assert neighbors_with_label(g, 0, 1) == []
    assert neighbors_with_label(g, 1, 1) == [0]


def test_neighbors_with_label_partitions_neighborhood():
    rng = random.Random(7)
    for _ in range(25):
        params = random_params(rng)
        g = random_graph(rng, params, rng.randrange(1, 8))
        for x in range(g.vertex_count):
            union = []
            for alpha in range(1, params.p + 1):
                union += neighbors_with_label(g, x, alpha)
            assert sorted(union) == g.neighbors(x)
            assert len(union) == len(set(union))


def test_label_duality():
    rng = random.Random(8)
    for _ in range(25):
        params = random_params(rng)
        g = random_graph(rng, params, rng.randrange(2, 8))
        for x in range(g.vertex_count):
            for y in g.neighbors(x):
                assert label_of(g, y, x) == dual_label(params,
                                                       label_of(g, x, y))


def test_simplicity_enforced():
    with pytest.raises(GraphInputError):
        NMGraph(NMParams(1, 1), 2, arcs=[(0, 1, 1)], edges=[(0, 1, 1)])
    with pytest.raises(GraphInputError):
        NMGraph(NMParams(1, 0), 2, arcs=[(0, 1, 1), (1, 0, 1)])
    with pytest.raises(GraphInputError):
        NMGraph(NMParams(1, 0), 2, arcs=[(0, 0, 1)])


def test_parse_basic():
    g = parse("nm 1 0\nvertices 2\narc 0 1 1\n")
    assert g.vertex_count == 2
    assert g.arcs == {(0, 1, 1)}


def test_parse_rejects_double_adjacency():
    text = "nm 1 1\nvertices 2\narc 0 1 1\nedge 0 1 1\n"
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.line == 4


def test_parse_error_line_numbers():
    with pytest.raises(ParseError) as err:
        parse("nm 1 0\nvertices 2\narc 0 5 1\n")
    assert err.value.line == 3
    with pytest.raises(ParseError):
        parse("vertices 2\n")
    with pytest.raises(ParseError):
        parse("nm 1 0\nvertices 2\narc 0 1 2\n")


def test_parse_comments_and_blanks():
    g = parse("# hello\nnm 0 2\n\nvertices 3\nedge 0 1 2\n")
    assert g.edges == {(0, 1, 2)}


def test_round_trip_random_graphs():
    rng = random.Random(42)
    for _ in range(100):
        params = random_params(rng)
        g = random_graph(rng, params, rng.randrange(0, 9))
        assert parse(serialize(g)) == g


def test_serialize_canonical_and_deterministic():
    params = NMParams(1, 1)
    g1 = NMGraph(params, 3, arcs=[(2, 1, 1), (0, 1, 1)], edges=[(2, 0, 1)])
    g2 = NMGraph(params, 3, arcs=[(0, 1, 1), (2, 1, 1)], edges=[(0, 2, 1)])
    assert serialize(g1) == serialize(g2)
    lines = serialize(g1).splitlines()
    assert lines[2:] == ["arc 0 1 1", "arc 2 1 1", "edge 0 2 1"]


def test_embed_round_trip():
    text = ("nm 1 0\nvertices 3\narc 0 1 1\narc 1 2 1\n"
            "embed 0 1\nembed 1 0 2\nembed 2 1\n")
    g = parse(text)
    assert g.embedding == {0: (1,), 1: (0, 2), 2: (1,)}
    assert parse(serialize(g)) == g


def test_embed_must_cover_neighbors():
    with pytest.raises(ParseError):
        parse("nm 1 0\nvertices 2\narc 0 1 1\nembed 0 1\n")
    with pytest.raises(ParseError):
        parse("nm 1 0\nvertices 2\narc 0 1 1\nembed 0 1\nembed 1\n")


def test_relabel_identity():
    rng = random.Random(3)
    g = random_graph(rng, NMParams(2, 1), 6)
    assert relabel(g) == g


def test_relabel_flip_single_arc():
    g = NMGraph(NMParams(1, 0), 2, arcs=[(0, 1, 1)])
    assert relabel(g, flip=[1]).arcs == {(1, 0, 1)}


def test_relabel_swaps_types():
    g = NMGraph(NMParams(2, 0), 3, arcs=[(0, 1, 1), (1, 2, 2)])
    out = relabel(g, arc_perm={1: 2, 2: 1})
    assert out.arcs == {(0, 1, 2), (1, 2, 1)}


def test_relabel_rejects_bad_permutation():
    g = NMGraph(NMParams(2, 0), 2, arcs=[(0, 1, 1)])
    with pytest.raises(GraphInputError):
        relabel(g, arc_perm={1: 1, 2: 1})
    with pytest.raises(GraphInputError):
        relabel(g, flip=[3])


def test_permute_vertices():
    g = NMGraph(NMParams(1, 0), 3, arcs=[(0, 1, 1)])
    out = permute_vertices(g, {0: 2, 1: 0, 2: 1})
    assert out.arcs == {(2, 0, 1)}

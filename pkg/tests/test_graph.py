from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from maxent.errors import EmptySelection, LoopRejected, MalformedGraph6, VertexOutOfRange
from maxent.graph import (
    Graph,
    all_graphs,
    build_graph,
    classify,
    complete_graph,
    components,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_tree,
    path_graph,
    relabel,
    star_graph,
    two_coloring,
)


@st.composite
def graphs(draw, max_n: int = 12):
    n = draw(st.integers(1, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Graph.from_edge_mask(n, mask)


def test_known_graph6_strings():
    assert graph6_encode(build_graph(2, [(1, 2)])) == "A_"
    assert graph6_encode(Graph.empty(1)) == "@"
    assert graph6_encode(path_graph(3)) == "Bg"
    assert graph6_encode(complete_graph(3)) == "Bw"
    assert graph6_decode(">>graph6<<A_") == build_graph(2, [(1, 2)])


@pytest.mark.parametrize("n", range(1, 6))
def test_graph6_round_trip_exhaustive(n):
    seen = set()
    for g in all_graphs(n):
        s = graph6_encode(g)
        assert graph6_decode(s) == g
        seen.add(s)
    assert len(seen) == 2 ** (n * (n - 1) // 2)


@given(graphs(max_n=40))
def test_graph6_round_trip_random(g):
    assert graph6_decode(graph6_encode(g)) == g


def test_long_form_graph6():
    g = path_graph(64)
    s = graph6_encode(g)
    assert s.startswith("~")
    assert graph6_decode(s) == g


@pytest.mark.parametrize("bad", ["", "A!", "A", "A__", "A`", "~??~"])
def test_malformed_graph6(bad):
    with pytest.raises(MalformedGraph6):
        graph6_decode(bad)


def test_build_graph_errors():
    with pytest.raises(LoopRejected):
        build_graph(3, [(2, 2)])
    with pytest.raises(LoopRejected):
        build_graph(3, [(2,)])
    with pytest.raises(VertexOutOfRange):
        build_graph(3, [(1, 4)])
    with pytest.raises(VertexOutOfRange):
        build_graph(0, [])


def test_duplicate_edges_collapse():
    assert build_graph(3, [(1, 2), (2, 1), (1, 2)]).num_edges == 1


def test_asymmetric_rows_rejected():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))


def test_edges_are_sorted_one_based():
    assert cycle_graph(4).edges() == [(1, 2), (1, 4), (2, 3), (3, 4)]


def test_two_coloring_and_classify():
    bip = two_coloring(cycle_graph(6))
    assert bip.left == frozenset({1, 3, 5})
    assert two_coloring(cycle_graph(5)) is None
    c = classify(cycle_graph(6))
    assert c.connected and c.unicyclic and not c.tree
    assert classify(star_graph(3)).tree
    assert classify(disjoint_union(path_graph(2), path_graph(3))).components == 2


def test_trees():
    assert is_tree(path_graph(5))
    assert not is_tree(cycle_graph(5))
    assert not is_tree(disjoint_union(path_graph(2), path_graph(2)))


def test_subgraphs():
    g = cycle_graph(5)
    assert induced_subgraph(g, [1, 2, 3]) == path_graph(3)
    assert delete_vertices(g, [5]) == path_graph(4)
    assert delete_vertices(g, range(1, 6)).n == 0
    with pytest.raises(EmptySelection):
        induced_subgraph(g, [])


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_relabel_preserves_components_and_edges(g, rnd):
    perm = list(range(1, g.n + 1))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert h.num_edges == g.num_edges
    assert sorted(bin(c).count("1") for c in components(h)) == sorted(bin(c).count("1") for c in components(g))
    assert sorted(h.degree(v) for v in range(1, g.n + 1)) == sorted(g.degree(v) for v in range(1, g.n + 1))

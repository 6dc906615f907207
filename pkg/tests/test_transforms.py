from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from test_graph import graphs

from maxent.errors import NoEdges, NotSignedUnit, TooLarge, VertexOutOfRange
from maxent.graph import Graph, build_graph, complete_graph, cycle_graph, graph6_encode, path_graph, star_graph
from maxent.linalg import char_poly, rank_int
from maxent.transforms import (
    chromatic_number,
    combined_orbit,
    jaeger_inverse,
    lc_orbit,
    lc_path,
    line_graph,
    local_complement,
    orbit_partition,
    seidel,
    switch,
    switch_set,
    switching_class,
)


def test_lc_on_path_gives_triangle():
    assert local_complement(path_graph(3), 2) == complete_graph(3)


def test_switch_single_vertex():
    assert switch(build_graph(2, [(1, 2)]), 1) == Graph.empty(2)
    assert switch(Graph.empty(3), 2) == path_graph(3)


@given(graphs(max_n=9), st.data())
def test_moves_are_involutions(g, data):
    i = data.draw(st.integers(1, g.n))
    assert local_complement(local_complement(g, i), i) == g
    assert switch(switch(g, i), i) == g


@given(graphs(max_n=9), st.data())
def test_switch_set_order_independent(g, data):
    vs = data.draw(st.lists(st.integers(1, g.n), max_size=5))
    assert switch_set(g, vs) == switch_set(g, list(reversed(vs)))


def test_vertex_checks():
    with pytest.raises(VertexOutOfRange):
        local_complement(path_graph(3), 4)
    with pytest.raises(VertexOutOfRange):
        switch(path_graph(3), 0)


def test_line_graphs():
    assert line_graph(path_graph(4)) == path_graph(3)
    assert line_graph(star_graph(3)) == complete_graph(3)
    assert line_graph(cycle_graph(5)).num_edges == 5
    with pytest.raises(NoEdges):
        line_graph(Graph.empty(3))


def test_jaeger_inverse_examples():
    p4 = path_graph(4)
    inv = jaeger_inverse(p4)
    assert rank_int(inv.adjacency()) == 4
    assert inv in lc_orbit(p4)
    path = lc_path(p4, inv)
    g = p4
    for v in path:
        g = local_complement(g, v)
    assert g == inv
    with pytest.raises(NotSignedUnit):
        jaeger_inverse(cycle_graph(6))
    with pytest.raises(NotSignedUnit):
        jaeger_inverse(complete_graph(3))


def test_orbit_sizes():
    assert [graph6_encode(h) for h in switching_class(build_graph(2, [(1, 2)]))] == ["A?", "A_"]
    assert len(lc_orbit(path_graph(8))) == 612
    assert lc_path(path_graph(3), path_graph(4)) is None
    with pytest.raises(TooLarge):
        lc_orbit(path_graph(10))


def test_combined_orbits():
    assert combined_orbit(4).orbit_sizes == [64]
    assert combined_orbit(5).orbit_sizes == [1024] and combined_orbit(5).transitive
    assert orbit_partition(3, "both").orbit_sizes == [8]
    rep = orbit_partition(4, "switch")
    assert sum(rep.orbit_sizes) == 64 and set(rep.orbit_sizes) == {8}
    with pytest.raises(TooLarge):
        orbit_partition(6)


@given(graphs(max_n=7), st.data())
def test_seidel_spectrum_switching_invariant(g, data):
    i = data.draw(st.integers(1, g.n))
    assert char_poly(seidel(g)) == char_poly(seidel(switch(g, i)))


def test_chromatic_numbers():
    assert chromatic_number(Graph.empty(4)) == 1
    assert chromatic_number(Graph.empty(0)) == 0
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(complete_graph(6)) == 6
    assert chromatic_number(cycle_graph(6)) == 2

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import graph_state_signs, local_complement_naive

from maxent.errors import DimensionMismatch, NotBipartite, ZeroVector
from maxent.graph import Cut, Graph, all_graphs, build_graph, cycle_graph, path_graph
from maxent.oracle import (
    PAULI_X,
    PAULI_Z,
    TAU_X,
    PauliString,
    StateVector,
    apply_gate,
    apply_lc_unitary,
    apply_switching_operator,
    basis_state,
    build_graph_state,
    cut_rank_gf2,
    joint_eigenspace_dimension,
    max_cut_rank,
    schmidt_measure_bounds,
    schmidt_rank,
    stabilizer_generators,
    states_equal,
    states_equal_up_to_phase,
    verify_stabilizer,
)
from maxent.transforms import local_complement, switch


def _all_cuts(n):
    for mask in range(1, (1 << n) - 1):
        yield frozenset(v for v in range(1, n + 1) if mask >> (v - 1) & 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_graph_state_amplitudes_match_sign_formula(n):
    for g in all_graphs(n):
        psi = build_graph_state(g)
        assert psi.is_normalized()
        signs = np.array(graph_state_signs(n, g.edges()))
        c = int(psi.re[0])
        assert psi.scale == n and c == 1
        assert (psi.re == signs).all() and not psi.im.any()


def test_vertex_one_is_top_bit():
    psi = basis_state(3, 0b100)
    flipped = apply_gate(basis_state(3, 0), 1, PAULI_X)
    assert states_equal(psi, flipped)


def test_generators_of_path():
    assert [p.letters for p in stabilizer_generators(path_graph(3))] == ["XZI", "ZXZ", "IZX"]


@pytest.mark.parametrize("n", range(1, 6))
def test_dense_and_symplectic_eigenspace_dimensions_agree(n):
    graphs = list(all_graphs(n))
    if n == 5:
        graphs = graphs[::17]
    for g in graphs:
        gens = stabilizer_generators(g)
        assert joint_eigenspace_dimension(gens, "dense") == joint_eigenspace_dimension(gens, "symplectic") == 1
        for k in range(len(gens) if n > 1 else 0):
            sub = gens[:k] + gens[k + 1 :]
            assert joint_eigenspace_dimension(sub, "dense") == joint_eigenspace_dimension(sub) == 2


def test_minus_identity_kills_eigenspace():
    gens = [PauliString("ZI"), PauliString("ZI", -1)]
    assert joint_eigenspace_dimension(gens) == 0
    assert joint_eigenspace_dimension(gens, "dense") == 0


def test_wrong_state_fails_stabilizer_check():
    g = path_graph(3)
    assert verify_stabilizer(g, build_graph_state(g))
    assert not verify_stabilizer(g, build_graph_state(Graph.empty(3)))


def test_y_letter_action():
    # Y|0> = i|1>
    out = PauliString("Y").apply(basis_state(1, 0))
    assert out.re.tolist() == [0, 0] and out.im.tolist() == [0, 1]


def test_phase_equivalence():
    g = cycle_graph(4)
    psi = build_graph_state(g)
    neg = StateVector(psi.n, -psi.re, -psi.im, psi.scale)
    rot = StateVector(psi.n, -psi.im, psi.re, psi.scale)
    assert states_equal_up_to_phase(psi, neg) and states_equal_up_to_phase(psi, rot)
    assert not states_equal(psi, neg)
    assert not states_equal_up_to_phase(psi, build_graph_state(path_graph(4)))
    with pytest.raises(ZeroVector):
        states_equal_up_to_phase(psi, StateVector(4, 0 * psi.re, 0 * psi.im, 0))
    with pytest.raises(DimensionMismatch):
        states_equal_up_to_phase(psi, build_graph_state(path_graph(3)))


def test_gates_square_to_pauli_up_to_phase():
    psi = build_graph_state(path_graph(3))
    twice = apply_gate(apply_gate(psi, 2, TAU_X), 2, TAU_X)
    assert states_equal_up_to_phase(twice, apply_gate(psi, 2, PAULI_X))
    z = apply_gate(psi, 1, PAULI_Z)
    assert states_equal(apply_gate(z, 1, PAULI_Z), psi)


@pytest.mark.parametrize("n", range(2, 6))
def test_lc_unitary_and_switching_operator(n):
    for g in all_graphs(n):
        psi = build_graph_state(g)
        for i in range(1, n + 1):
            lc = local_complement(g, i)
            assert lc.adjacency() == local_complement_naive(g.adjacency(), i)
            assert states_equal_up_to_phase(apply_lc_unitary(psi, g, i), build_graph_state(lc))
            assert states_equal(apply_switching_operator(psi, i), build_graph_state(switch(g, i)))


@pytest.mark.parametrize("n", range(2, 6))
def test_schmidt_rank_equals_power_of_cut_rank(n):
    for g in all_graphs(n):
        psi = build_graph_state(g)
        for side in _all_cuts(n):
            assert schmidt_rank(psi, Cut.of(n, side)) == 2 ** cut_rank_gf2(g, side)


@settings(max_examples=40, deadline=None)
@given(st.integers(6, 8), st.integers(0, 2**32 - 1))
def test_schmidt_rank_identity_sampled(n, seed):
    rng = np.random.default_rng(seed)
    g = Graph.from_edge_mask(n, int(rng.integers(0, 1 << (n * (n - 1) // 2))))
    side = frozenset(int(v) for v in rng.choice(np.arange(1, n + 1), int(rng.integers(1, n)), replace=False))
    assert schmidt_rank(build_graph_state(g), Cut.of(n, side)) == 2 ** cut_rank_gf2(g, side)


def test_schmidt_rank_after_complex_gates():
    g = path_graph(4)
    psi = apply_lc_unitary(build_graph_state(g), g, 2)
    assert psi.im.any()
    cut = Cut.of(4, {1, 2})
    assert schmidt_rank(psi, cut) == schmidt_rank(build_graph_state(local_complement(g, 2)), cut)


def test_max_cut_rank_examples():
    best, cut = max_cut_rank(cycle_graph(6))
    assert best == 3 and cut_rank_gf2(cycle_graph(6), cut.side_a) == 3
    b = schmidt_measure_bounds(cycle_graph(4))
    assert b.pinned and b.lower == 2 and b.half_rank_real == 1
    assert schmidt_measure_bounds(build_graph(2, [(1, 2)])).lower == 1
    with pytest.raises(NotBipartite):
        schmidt_measure_bounds(cycle_graph(5))

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_colourable, brute_has_clique, random_graph
from turanstab.constructions import complete_graph, cycle_graph, petersen_graph, turan_graph, wheel_graph
from turanstab.graph import (
    Graph,
    Partition,
    clique_number,
    count_internal,
    degeneracy_order,
    has_clique,
    is_r_partite,
    proper_r_coloring,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def test_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


@given(graphs())
def test_symmetry_and_handshake(g):
    for u in range(g.n):
        assert not g.has_edge(u, u)
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    assert 2 * g.edge_count == sum(g.degrees())
    assert len(g.edges()) == g.edge_count


def test_clique_examples():
    assert has_clique(complete_graph(4), 3)
    assert not has_clique(cycle_graph(5), 3)
    t39 = turan_graph(3, 9)
    assert not has_clique(t39, 4) and has_clique(t39, 3)
    assert has_clique(Graph(1), 1) and not has_clique(Graph(0), 1)
    assert not has_clique(Graph(3), 4)
    with pytest.raises(ValueError):
        has_clique(Graph(3), 0)


@given(graphs(max_n=10), st.integers(1, 6))
@settings(max_examples=300)
def test_clique_matches_subset_search(g, q):
    assert has_clique(g, q) == brute_has_clique(g, q)


def test_clique_number_random():
    rng = random.Random(3)
    for _ in range(100):
        g = random_graph(rng.randint(1, 10), rng.random(), rng)
        w = clique_number(g)
        assert brute_has_clique(g, w) and not brute_has_clique(g, w + 1)


def test_colouring_examples():
    assert proper_r_coloring(cycle_graph(5), 2) is None
    p = proper_r_coloring(turan_graph(3, 7), 3)
    assert p is not None and p.internal == 0
    pet = petersen_graph()
    assert proper_r_coloring(pet, 2) is None
    p = proper_r_coloring(pet, 3)
    assert p is not None and count_internal(pet, p.classes) == 0


@given(graphs(max_n=8), st.integers(1, 4))
@settings(max_examples=200)
def test_colouring_matches_brute_force(g, r):
    p = proper_r_coloring(g, r)
    assert (p is not None) == brute_colourable(g, r)
    if p is not None:
        assert count_internal(g, p.classes) == 0
        assert all(0 <= c < r for c in p.classes)


def test_colour_classes_ordered_by_size():
    # removing a rim vertex of W_5 leaves P_4 joined to the hub
    g = wheel_graph(5).delete_vertices([0])
    p = proper_r_coloring(g, 3)
    sizes = [p.classes.count(c) for c in range(3)]
    assert sizes == [2, 2, 1]


@given(graphs())
def test_degeneracy_order_is_permutation(g):
    assert sorted(degeneracy_order(g)) == list(range(g.n))


@given(graphs(max_n=8), st.randoms())
def test_relabel_preserves_structure(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_induced_and_complement():
    g = cycle_graph(5)
    h = g.induced([0, 1, 2])
    assert h.edges() == [(0, 1), (1, 2)]
    assert g.complement().edge_count == 5
    assert g.delete_vertices([0]).edge_count == 3


def test_partition_internal_recomputed():
    g = cycle_graph(5)
    p = Partition.of(g, [0, 1, 0, 1, 0], 2)
    assert p.internal == 1 and p.crossing(g) == 4
    assert p.to_json() == [0, 1, 0, 1, 0]
    with pytest.raises(ValueError):
        Partition.of(g, [0, 1, 2, 0, 1], 2)


def test_is_r_partite():
    assert is_r_partite(turan_graph(4, 9), 4)
    assert not is_r_partite(complete_graph(5), 4)

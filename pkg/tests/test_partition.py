import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_dr, clique_free, random_graph
from test_graph import graphs
from turanstab.constructions import (
    BlowupSpec,
    PentagonalSpec,
    blowup,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    path_graph,
    petersen_graph,
    ptg_build,
    star_graph,
    turan_graph,
    turan_number,
)
from turanstab.graph import Partition, count_internal, proper_r_coloring
from turanstab.partition import (
    CapExceeded,
    dr_bruteforce,
    dr_exact,
    max_crossing_extend,
    ptg_dr,
    satisfies_local_optimality,
    symmetrize,
)
from turanstab.canon import are_isomorphic


def test_bruteforce_examples():
    assert dr_bruteforce(cycle_graph(5), 2).value == 1
    assert dr_bruteforce(complete_graph(4), 3).value == 1
    assert dr_bruteforce(complete_graph(4), 2).value == 2
    assert dr_bruteforce(turan_graph(3, 9), 3).value == 0
    with pytest.raises(CapExceeded):
        dr_bruteforce(cycle_graph(15), 2)


def test_exact_examples():
    assert dr_exact(petersen_graph(), 2).value == 3
    assert dr_exact(blowup(BlowupSpec(cycle_graph(5), (1, 2, 2, 3, 3))), 2).value == 2
    assert dr_exact(complete_multipartite((2, 3)), 2).value == 0


@given(graphs(max_n=7), st.integers(1, 4))
@settings(max_examples=150)
def test_both_solvers_match_itertools_oracle(g, r):
    want = brute_dr(g, r)
    for res in (dr_exact(g, r), dr_bruteforce(g, r)):
        assert res.value == want
        assert res.partition.internal == want
        assert count_internal(g, res.partition.classes) == want


def test_exact_equals_bruteforce_random():
    rng = random.Random(12)
    for _ in range(300):
        n = rng.randint(6, 10)
        r = rng.randint(2, 4)
        g = random_graph(n, rng.random(), rng)
        assert dr_exact(g, r).value == dr_bruteforce(g, r).value


@given(graphs(max_n=9), st.integers(1, 4))
@settings(max_examples=150)
def test_zero_iff_colourable(g, r):
    assert (dr_exact(g, r).value == 0) == (proper_r_coloring(g, r) is not None)


def test_time_budget_flags_inexact():
    rng = random.Random(0)
    g = random_graph(40, 0.5, rng)
    res = dr_exact(g, 3, time_budget=0.0)
    assert not res.exact
    assert count_internal(g, res.partition.classes) == res.value


def test_ptg_dr_examples():
    assert ptg_dr(PentagonalSpec(2, 1, 1, (1, 1))).value == 1
    res = ptg_dr(PentagonalSpec(3, 2, 3, (3, 4, 5)))
    assert res.value == 6
    g = ptg_build(PentagonalSpec(3, 2, 3, (3, 4, 5)))
    assert count_internal(g, res.partition.classes) == 6
    with pytest.raises(ValueError):
        ptg_dr(PentagonalSpec(2, 2, 1, (3, 3)))


def test_ptg_dr_matches_exact_solver():
    from turanstab.verify import pent_r_partite_specs

    for r in (2, 3):
        for spec in pent_r_partite_specs(r, 10):
            assert dr_exact(ptg_build(spec), r).value == spec.x * spec.y


def test_extend_examples():
    star = star_graph(3)
    p = max_crossing_extend(star, 2, {0: 1})
    assert p.classes == (1, 0, 0, 0) and p.internal == 0
    assert max_crossing_extend(cycle_graph(5), 2, {}).internal == 1


def test_extend_is_locally_optimal():
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randint(1, 12)
        r = rng.randint(2, 4)
        g = random_graph(n, rng.random(), rng)
        fixed = {v: rng.randrange(r) for v in range(n) if rng.random() < 0.4}
        p = max_crossing_extend(g, r, fixed)
        assert all(p.classes[v] == c for v, c in fixed.items())
        free = [v for v in range(n) if v not in fixed]
        assert satisfies_local_optimality(g, p, free)


def test_symmetrize_examples():
    spec = BlowupSpec(path_graph(4), (1, 2, 1, 2))
    g = blowup(spec)
    p = dr_exact(g, 2).partition
    out_spec, out_p = symmetrize(spec, p)
    assert out_spec == spec and out_p.internal == 0

    c5 = BlowupSpec(cycle_graph(5), (1, 1, 1, 1, 1))
    p = dr_exact(blowup(c5), 2).partition
    out_spec, out_p = symmetrize(c5, p)
    assert out_p.internal == 0
    assert are_isomorphic(out_spec.base, path_graph(5))

    k3 = BlowupSpec(complete_graph(3), (2, 2, 2))
    g = blowup(k3)
    p = dr_exact(g, 2).partition
    assert p.crossing(g) == 8
    out_spec, out_p = symmetrize(k3, p)
    assert out_p.internal == 0 and out_spec.base.edge_count == 2
    assert out_p.crossing(blowup(out_spec)) >= 8


def test_symmetrize_properties():
    rng = random.Random(14)
    for _ in range(150):
        base = random_graph(rng.randint(2, 5), rng.random(), rng)
        sizes = tuple(rng.randint(1, 3) for _ in range(base.n))
        spec = BlowupSpec(base, sizes)
        g = blowup(spec)
        r = rng.randint(2, 3)
        p = Partition.of(g, [rng.randrange(r) for _ in range(g.n)], r)
        out_spec, out_p = symmetrize(spec, p)
        assert out_spec.sizes == sizes
        assert all(base.has_edge(u, v) for u, v in out_spec.base.edges())
        h = blowup(out_spec)
        assert out_p.internal <= p.internal
        assert count_internal(h, out_p.classes) == out_p.internal
        assert out_p.crossing(h) >= p.crossing(g)


def test_furedi_surrogate_on_enumerated_graphs():
    for r, n in [(2, 7), (2, 8), (3, 7)]:
        t = turan_number(r, n)
        for g in clique_free(n, r + 1, max(0, t - n)):
            assert dr_exact(g, r).value <= max(0, t - g.edge_count)

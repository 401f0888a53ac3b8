import random
from math import isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_has_clique, random_graph
from turanstab.canon import are_isomorphic
from turanstab.constructions import (
    BlowupSpec,
    PentagonalSpec,
    blowup,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    pentagon_base,
    ptg_build,
    sample_ptg,
    turan_graph,
    turan_number,
    turan_part_sizes,
    turan_spec,
)
from turanstab.graph import Graph, count_internal, has_clique, proper_r_coloring
from turanstab.partition import dr_exact


def test_turan_number_examples():
    assert turan_number(2, 5) == 6
    assert turan_number(3, 10) == 33
    assert turan_number(5, 3) == 3


@given(st.integers(1, 12), st.integers(0, 60))
def test_turan_number_is_max_over_part_sizes(r, n):
    # direct count on the graph equals the closed form
    if n <= 30:
        assert turan_graph(r, n).edge_count == turan_number(r, n)
    sizes = turan_part_sizes(r, n)
    assert sum(sizes) == n and max(sizes) - min(sizes) <= 1 and sizes == sorted(sizes, reverse=True)


def test_turan_number_maximizes_r_partite_edges():
    # exhaustive over compositions for small n
    def best(r, n):
        if r == 1:
            return 0
        return max(k * (n - k) + best(r - 1, n - k) for k in range(n + 1))

    for r in range(1, 5):
        for n in range(0, 13):
            assert turan_number(r, n) == best(r, n)


def test_turan_graph_examples():
    assert are_isomorphic(turan_graph(2, 4), cycle_graph(4))
    assert are_isomorphic(turan_graph(3, 3), complete_graph(3))
    g = turan_graph(3, 10)
    assert g.edge_count == 33 and not has_clique(g, 4)
    assert proper_r_coloring(g, 3) is not None


def test_blowup_examples():
    c5 = cycle_graph(5)
    assert blowup(BlowupSpec(c5, (1, 1, 1, 1, 1))) == c5
    assert blowup(BlowupSpec(c5, (2, 1, 1, 1, 1))).edge_count == 7
    k2 = complete_graph(2)
    g = blowup(BlowupSpec(k2, (3, 4)))
    assert g.edge_count == 12 and are_isomorphic(g, complete_multipartite((3, 4)))
    with pytest.raises(ValueError):
        BlowupSpec(c5, (1, 1))


def test_blowup_edge_formula_random():
    rng = random.Random(4)
    for _ in range(100):
        base = random_graph(rng.randint(1, 6), rng.random(), rng)
        sizes = tuple(rng.randint(0, 3) for _ in range(base.n))
        spec = BlowupSpec(base, sizes)
        g = blowup(spec)
        assert g.n == sum(sizes) and g.edge_count == spec.edge_count()


def test_pentagon_base_structure():
    for r in range(2, 6):
        b = pentagon_base(r)
        assert b.n == r + 3
        assert b.induced(range(5)).edge_count == 5
        assert are_isomorphic(b.induced(range(5)), cycle_graph(5))
        assert b.edge_count == (r + 3) * (r + 2) // 2 - 5
        assert not has_clique(b, r + 1)


def test_ptg_examples():
    assert are_isomorphic(ptg_build(PentagonalSpec(2, 1, 1, (1, 1))), cycle_graph(5))
    assert are_isomorphic(ptg_build(PentagonalSpec(2, 0, 0, (2, 3))), complete_multipartite((2, 3)))


def random_spec(rng, r, max_part=3):
    return PentagonalSpec(r, rng.randint(0, max_part), rng.randint(0, max_part),
                          tuple(rng.randint(0, max_part) for _ in range(r)))


def test_ptg_clique_free_sweep():
    rng = random.Random(7)
    for _ in range(200):
        spec = random_spec(rng, rng.randint(2, 4))
        g = ptg_build(spec)
        assert g.n == spec.n
        assert not has_clique(g, spec.r + 1)
        assert g.edge_count == spec.edge_count()


def test_ptg_clique_free_vs_subset_search():
    rng = random.Random(8)
    for _ in range(30):
        spec = random_spec(rng, rng.randint(2, 3), max_part=2)
        assert not brute_has_clique(ptg_build(spec), spec.r + 1)


def test_pentagonal_predicates():
    assert PentagonalSpec(2, 1, 1, (1, 1)).is_pent_turan
    assert not PentagonalSpec(2, 2, 1, (1, 1)).is_pent_r_partite
    s = PentagonalSpec(3, 2, 3, (3, 4, 5))
    assert s.is_pent_r_partite
    lo, rem = divmod(s.n + s.x, s.r)
    assert s.is_pent_turan == all(v in (lo, lo + (rem > 0)) for v in s.balanced_sums())
    assert turan_spec(3, 10).is_pent_turan
    with pytest.raises(ValueError):
        PentagonalSpec(2, 1, 1, (1,))
    assert PentagonalSpec.from_json(s.to_json()) == s


def test_standard_partition_realizes_xy():
    rng = random.Random(11)
    for _ in range(100):
        spec = random_spec(rng, rng.randint(2, 4))
        p = spec.standard_partition()
        assert count_internal(ptg_build(spec), p.classes) == spec.x * spec.y


def test_sample_ptg_examples():
    assert sample_ptg(2, 100, 0) == turan_spec(2, 100)
    s = sample_ptg(2, 100, 1)
    assert (s.x, s.y) == (1, 3) and sorted(s.z) == [46, 47] and s.n == 100
    assert 4 * s.x * s.y >= isqrt(100)
    s = sample_ptg(2, 32, 2)
    assert (s.x, s.y, s.z) == (2, 2, (13, 13))
    with pytest.raises(ValueError):
        sample_ptg(2, 32, 3)
    with pytest.raises(ValueError):
        sample_ptg(2, 32, -1)


def test_sample_ptg_targets_and_validity():
    for r, n in [(2, 32), (2, 64), (2, 100), (2, 333), (3, 162), (3, 243), (4, 600)]:
        for s in range(n // r**4 + 1):
            spec = sample_ptg(r, n, s)
            assert spec.n == n and spec.is_pent_r_partite
            if s:
                t = spec.y
                sums = [spec.z[0] + t + (s + 1) // 2, spec.z[1] + t + s // 2] + list(spec.z[2:])
                assert sums == turan_part_sizes(r, n)


def test_sample_ptg_dr_small():
    # exact solver agrees with s*t on the smallest instances
    spec = sample_ptg(2, 16, 1)
    assert dr_exact(ptg_build(spec), 2).value == spec.x * spec.y


def test_degenerate_blowup_zero_parts():
    g = blowup(BlowupSpec(cycle_graph(5), (0, 0, 0, 0, 0)))
    assert g == Graph(0)

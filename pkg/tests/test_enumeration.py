import pytest

from oracles import atlas, brute_has_clique, clique_free, labelled_classes
from turanstab.canon import are_isomorphic, canonical_key
from turanstab.constructions import complete_graph, complete_multipartite, cycle_graph
from turanstab.enumeration import (
    EnumerationCapExceeded,
    EnumSpec,
    enumerate_clique_free,
    enumeration_cap,
    ingest_graph6,
    summarize,
)
from turanstab.graph import Graph, has_clique
from turanstab.graph6 import HEADER, Graph6Error, encode_graph6

# OEIS A006785: triangle-free graphs on n unlabelled vertices
TRIANGLE_FREE = [1, 1, 2, 3, 7, 14, 38, 107, 410, 1897]


def test_examples():
    assert len(clique_free(5, 3)) == 14
    assert len(clique_free(4, 3)) == 7
    dense = clique_free(5, 3, 5)
    assert any(are_isomorphic(g, cycle_graph(5)) for g in dense)
    assert any(are_isomorphic(g, complete_multipartite((2, 3))) for g in dense)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("q", [3, 4])
def test_counts_match_labelled_oracle(n, q):
    reps = labelled_classes(n)
    expected = sum(1 for edges in reps.values() if not brute_has_clique(Graph.from_edges(n, edges), q))
    assert len(clique_free(n, q)) == expected


@pytest.mark.parametrize("n", [6, 7])
@pytest.mark.parametrize("q", [3, 4])
def test_counts_match_atlas(n, q):
    expected = sum(1 for g in atlas(n) if not has_clique(g, q))
    assert len(clique_free(n, q)) == expected


def test_known_triangle_free_counts():
    for n in range(1, 10):
        assert len(clique_free(n, 3)) == TRIANGLE_FREE[n]


@pytest.mark.parametrize("n,q,m", [(7, 3, 0), (8, 3, 8), (7, 4, 10), (6, 5, 0)])
def test_stream_properties(n, q, m):
    graphs = clique_free(n, q, m)
    keys = [canonical_key(g) for g in graphs]
    assert len(set(keys)) == len(keys)
    assert all(not has_clique(g, q) and g.edge_count >= m and g.n == n for g in graphs)


def test_edge_floor_is_a_filter():
    full = clique_free(8, 3)
    for m in (0, 6, 10, 13, 16):
        want = {canonical_key(g) for g in full if g.edge_count >= m}
        assert {canonical_key(g) for g in clique_free(8, 3, m)} == want


def test_degenerate_specs():
    assert list(enumerate_clique_free(EnumSpec(0, 3))) == [Graph(0)]
    assert list(enumerate_clique_free(EnumSpec(3, 1))) == []
    assert list(enumerate_clique_free(EnumSpec(3, 2))) == [Graph(3)]
    assert list(enumerate_clique_free(EnumSpec(4, 3, 5))) == []
    with pytest.raises(ValueError):
        EnumSpec(-1, 3)


def test_cap(monkeypatch):
    with pytest.raises(EnumerationCapExceeded):
        list(enumerate_clique_free(EnumSpec(11, 3)))
    monkeypatch.setenv("TURANSTAB_ENUM_CAP", "4")
    assert enumeration_cap() == 4
    with pytest.raises(EnumerationCapExceeded):
        list(enumerate_clique_free(EnumSpec(5, 3)))


def test_ingest():
    lines = [encode_graph6(g) for g in (cycle_graph(5), complete_graph(4), Graph(3))]
    assert len(list(ingest_graph6(lines))) == 3
    assert list(ingest_graph6([HEADER, "C~"])) == [complete_graph(4)]
    ing = ingest_graph6(["C~", "C>", "Dhc"], strict=False)
    assert len(list(ing)) == 2 and len(ing.errors) == 1 and ing.errors[0][0] == 2
    with pytest.raises(Graph6Error, match="line 2"):
        list(ingest_graph6(["C~", "C>"]))
    ing = ingest_graph6(lines, forbidden_clique=3, min_edges=1)
    assert list(ing) == [cycle_graph(5)] and ing.filtered == 2


def test_summarize():
    s = summarize(clique_free(5, 3))
    assert s["count"] == 14 and s["max_edges"] == 6
    assert sum(s["histogram"].values()) == 14

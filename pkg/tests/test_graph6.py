import random

import networkx as nx
import pytest
from hypothesis import given

from oracles import nx_graph, random_graph
from test_graph import graphs
from turanstab.constructions import complete_graph, cycle_graph
from turanstab.graph import Graph
from turanstab.graph6 import HEADER, Graph6Error, decode_graph6, encode_graph6, read_graph6, write_graph6


def test_examples():
    assert encode_graph6(complete_graph(4)) == "C~"
    assert encode_graph6(Graph(1)) == "@"
    assert encode_graph6(Graph(0)) == "?"


def test_matches_networkx_bytes():
    rng = random.Random(1)
    for n in list(range(0, 20)) + [62, 63, 64, 100, 300]:
        g = random_graph(n, rng.random(), rng)
        expected = nx.to_graph6_bytes(nx_graph(g), header=False).decode().strip()
        assert encode_graph6(g) == expected


def test_round_trip_random():
    rng = random.Random(2)
    for _ in range(100):
        g = random_graph(rng.randint(0, 20), rng.random(), rng)
        assert decode_graph6(encode_graph6(g)) == g


@given(graphs(max_n=12))
def test_round_trip_property(g):
    assert decode_graph6(encode_graph6(g)) == g


def test_large_size_forms():
    g = Graph.from_edges(70, [(0, 69), (5, 6)])
    s = encode_graph6(g)
    assert s.startswith("~")
    assert decode_graph6(s) == g
    nx_g = nx.from_graph6_bytes(s.encode())
    assert sorted(nx_g.edges()) == [(0, 69), (5, 6)]
    # 36-bit size form
    big = "~~" + chr(63) * 3 + chr(63) + chr(63 + 1) + chr(63 + 2)  # n = 66
    assert decode_graph6(big + chr(63) * ((66 * 65 // 2 + 5) // 6)).n == 66


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C>", "D\x7f", "C~\x80", "Dhc?", "~??"])
def test_malformed(bad):
    with pytest.raises(Graph6Error):
        decode_graph6(bad)


def test_nonzero_padding_rejected():
    # C_5 needs 10 bits; the last two padding bits must be zero
    s = encode_graph6(cycle_graph(5))
    last = ord(s[-1]) - 63
    assert last & 0b11 == 0
    with pytest.raises(Graph6Error):
        decode_graph6(s[:-1] + chr(63 + (last | 1)))


def test_header_and_streams():
    text = write_graph6([cycle_graph(5), complete_graph(4)], header=True)
    assert text.startswith(HEADER)
    got = list(read_graph6(text.splitlines()))
    assert got == [cycle_graph(5), complete_graph(4)]
    assert list(read_graph6([HEADER + "C~"])) == [complete_graph(4)]

"""Isomorph-free generation of K_q-free graphs and graph6 ingestion."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .canon import canonical_key, canonical_labeling
from .graph import Graph, _bits, _clique_in, has_clique
from .graph6 import HEADER, Graph6Error, decode_graph6

DEFAULT_ENUM_CAP = 10


def enumeration_cap() -> int:
    return int(os.environ.get("TURANSTAB_ENUM_CAP", DEFAULT_ENUM_CAP))


class EnumerationCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class EnumSpec:
    n: int
    forbidden_clique: int
    min_edges: int = 0

    def __post_init__(self):
        if self.n < 0 or self.forbidden_clique < 1 or self.min_edges < 0:
            raise ValueError(f"invalid enumeration spec {self}")


def _addable(g: Graph, q: int) -> list[tuple[int, int]]:
    rows = g.rows
    out = []
    for u in range(g.n):
        ru = rows[u]
        for v in range(u + 1, g.n):
            if ru >> v & 1:
                continue
            if not _clique_in(rows, ru & rows[v], q - 2):
                out.append((u, v))
    return out


def _edge_keys(g: Graph) -> dict[tuple[int, int], int]:
    # label-invariant score of each edge; the deletion candidate is the max
    rows = g.rows
    n = g.n
    deg = [r.bit_count() for r in rows]
    inv = []
    for v in range(n):
        s = 0
        for w in _bits(rows[v]):
            s += deg[w]
        inv.append(deg[v] * (n * n + 1) + s)
    scale = n * n * n + n + 1
    keys = {}
    for u in range(n):
        for v in _bits(rows[u] >> (u + 1)):
            v += u + 1
            a, b = inv[u], inv[v]
            if a < b:
                a, b = b, a
            keys[(u, v)] = ((a * scale + b) * (n + 1)) + (rows[u] & rows[v]).bit_count()
    return keys


def _children(g: Graph, gkey, q: int) -> Iterator[tuple[Graph, tuple]]:
    seen = set()
    for u, v in _addable(g, q):
        child = g.add_edge(u, v)
        keys = _edge_keys(child)
        top = max(keys.values())
        if keys[(u, v)] != top:
            continue
        ties = [e for e, k in keys.items() if k == top]
        ckey = None
        if len(ties) > 1:
            key, order, _ = canonical_labeling(child)
            ckey = (child.n, key)
            label = [0] * child.n
            for i, w in enumerate(order):
                label[w] = i
            chosen = min(ties, key=lambda e: sorted((label[e[0]], label[e[1]])))
            if chosen != (u, v) and canonical_key(child.remove_edge(*chosen)) != gkey:
                continue
        if ckey is None:
            ckey = canonical_key(child)
        if ckey in seen:
            continue
        seen.add(ckey)
        yield child, ckey


def enumerate_clique_free(spec: EnumSpec, cap: int | None = None) -> Iterator[Graph]:
    """One graph per isomorphism class of K_q-free graphs on ``n`` vertices with
    at least ``min_edges`` edges.

    Graphs grow one edge at a time from the empty graph.  A child G+e is kept
    only if e is its canonical deletion edge (up to isomorphism of the
    parent), so every class has exactly one parent.  Graphs that already
    contain K_q are never generated, and a graph is not extended when even all
    of its addable edges could not reach the edge floor.
    """
    cap = enumeration_cap() if cap is None else cap
    if spec.n > cap:
        raise EnumerationCapExceeded(f"n={spec.n} exceeds enumeration cap {cap}")
    q = spec.forbidden_clique
    root = Graph(spec.n)
    if has_clique(root, q):
        return

    def walk(g: Graph, gkey, m: int) -> Iterator[Graph]:
        if m >= spec.min_edges:
            yield g
        if m + 1 > spec.n * (spec.n - 1) // 2:
            return
        if m < spec.min_edges and m + len(_addable(g, q)) < spec.min_edges:
            return
        for child, ckey in _children(g, gkey, q):
            yield from walk(child, ckey, m + 1)

    yield from walk(root, canonical_key(root), 0)


def enumerate_all(n: int, q: int, min_edges: int = 0) -> list[Graph]:
    return list(enumerate_clique_free(EnumSpec(n, q, min_edges)))


@dataclass
class Graph6Ingest:
    """Iterate over graphs in a graph6 line stream.

    In strict mode the first malformed line raises ``Graph6Error`` naming the
    line; in lenient mode it is recorded in ``errors`` and skipped.  With
    ``forbidden_clique`` / ``min_edges`` set, graphs failing the re-check are
    dropped and counted in ``filtered``.
    """

    lines: Iterable[str]
    strict: bool = True
    forbidden_clique: int | None = None
    min_edges: int | None = None
    errors: list[tuple[int, str]] = field(default_factory=list)
    filtered: int = 0

    def __iter__(self) -> Iterator[Graph]:
        first = True
        for lineno, line in enumerate(self.lines, 1):
            s = line.strip()
            if not s:
                continue
            if first and s.startswith(HEADER):
                s = s[len(HEADER):]
            first = False
            if not s:
                continue
            try:
                g = decode_graph6(s)
            except Graph6Error as exc:
                if self.strict:
                    raise Graph6Error(f"line {lineno}: {exc}") from None
                self.errors.append((lineno, str(exc)))
                continue
            if self.forbidden_clique is not None and has_clique(g, self.forbidden_clique):
                self.filtered += 1
                continue
            if self.min_edges is not None and g.edge_count < self.min_edges:
                self.filtered += 1
                continue
            yield g


def ingest_graph6(lines: Iterable[str], strict: bool = True, forbidden_clique: int | None = None,
                  min_edges: int | None = None) -> Graph6Ingest:
    return Graph6Ingest(lines, strict, forbidden_clique, min_edges)


def summarize(graphs: Iterable[Graph]) -> dict:
    hist: dict[int, int] = {}
    for g in graphs:
        e = g.edge_count
        hist[e] = hist.get(e, 0) + 1
    return {
        "count": sum(hist.values()),
        "max_edges": max(hist) if hist else None,
        "histogram": {str(k): hist[k] for k in sorted(hist)},
    }

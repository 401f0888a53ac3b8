"""Dense simple graphs stored as adjacency bitmasks.

Row ``rows[v]`` is a Python int whose bit ``w`` is set iff ``v ~ w``.  Python
ints have no fixed width, so there is no hard vertex cap; the one-word fast
path simply covers every graph the checks need.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if rows is None:
            rows = (0,) * n
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full or row >> v & 1:
                raise ValueError(f"row {v} has bits outside [n] or a loop")
            for w in _bits(row):
                if not rows[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")
        self.n = n
        self.rows = rows
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # internal constructor that skips validation
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"

    def __getstate__(self):
        return (self.n, self.rows)

    def __setstate__(self, state):
        self.n, self.rows = state
        self._hash = None

    # -- queries -----------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self.rows):
            for v in _bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    # -- derived graphs ----------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in _bits(self.rows[v]):
                i = index.get(w)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Graph._trusted(len(vertices), tuple(rows))

    def delete_vertices(self, removed: Iterable[int]) -> "Graph":
        gone = set(removed)
        return self.induced([v for v in range(self.n) if v not in gone])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            new = 0
            for w in _bits(row):
                new |= 1 << perm[w]
            rows[perm[v]] = new
        return Graph._trusted(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._trusted(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges())
        return h


@dataclass(frozen=True)
class Partition:
    """Assignment of each vertex to one of ``r`` classes (0-based), with the
    internal-edge count cached at construction."""

    classes: tuple[int, ...]
    r: int
    internal: int = field(compare=False)

    @classmethod
    def of(cls, g: Graph, classes: Sequence[int], r: int) -> "Partition":
        classes = tuple(classes)
        if len(classes) != g.n:
            raise ValueError("partition length does not match vertex count")
        if any(not 0 <= c < r for c in classes):
            raise ValueError(f"class index outside [0, {r})")
        return cls(classes, r, count_internal(g, classes))

    def members(self, c: int) -> list[int]:
        return [v for v, k in enumerate(self.classes) if k == c]

    def masks(self) -> list[int]:
        out = [0] * self.r
        for v, c in enumerate(self.classes):
            out[c] |= 1 << v
        return out

    def crossing(self, g: Graph) -> int:
        return g.edge_count - self.internal

    def to_json(self) -> list[int]:
        return list(self.classes)


def count_internal(g: Graph, classes: Sequence[int]) -> int:
    masks: dict[int, int] = {}
    for v, c in enumerate(classes):
        masks[c] = masks.get(c, 0) | 1 << v
    total = 0
    for v, row in enumerate(g.rows):
        total += (row & masks[classes[v]]).bit_count()
    return total // 2


# -- clique search -----------------------------------------------------------


def degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last ordering: repeatedly strip a minimum-degree vertex
    (lowest index on ties); the returned list is the reverse of the strip
    order, so the densest core comes first."""
    alive = (1 << g.n) - 1
    stripped = []
    for _ in range(g.n):
        best, best_deg = -1, g.n + 1
        for v in _bits(alive):
            d = (g.rows[v] & alive).bit_count()
            if d < best_deg:
                best, best_deg = v, d
        stripped.append(best)
        alive &= ~(1 << best)
    stripped.reverse()
    return stripped


def _twin_quotient(g: Graph) -> Graph:
    # vertices with identical open neighbourhoods are pairwise non-adjacent and
    # interchangeable inside any clique, so one per class is enough
    reps: dict[int, int] = {}
    keep = []
    for v, row in enumerate(g.rows):
        if row not in reps:
            reps[row] = v
            keep.append(v)
    if len(keep) == g.n:
        return g
    return g.induced(keep)


def _clique_in(rows: Sequence[int], cand: int, need: int) -> bool:
    if need <= 0:
        return True
    if cand.bit_count() < need:
        return False
    if need == 1:
        return cand != 0
    if need == 2:
        for v in _bits(cand):
            if rows[v] & cand:
                return True
        return False
    # pivot on the candidate with most candidate-neighbours: any clique of the
    # required size must contain a non-neighbour of the pivot or the pivot itself
    pivot = max(_bits(cand), key=lambda v: (rows[v] & cand).bit_count())
    branch = cand & ~rows[pivot]
    for v in _bits(branch):
        if _clique_in(rows, cand & rows[v], need - 1):
            return True
        cand &= ~(1 << v)
        if cand.bit_count() < need:
            return False
    return False


def has_clique(g: Graph, q: int) -> bool:
    """True iff ``g`` contains a complete subgraph on ``q`` vertices."""
    if q < 1:
        raise ValueError("clique size must be positive")
    if q == 1:
        return g.n >= 1
    if q > g.n:
        return False
    h = _twin_quotient(g)
    order = degeneracy_order(h)
    seen = 0
    for v in order:
        # cliques through v using only vertices later in the order
        cand = h.rows[v] & ~seen
        if _clique_in(h.rows, cand, q - 1):
            return True
        seen |= 1 << v
    return False


def clique_number(g: Graph) -> int:
    q = 1 if g.n else 0
    while has_clique(g, q + 1):
        q += 1
    return q


# -- proper colourings -------------------------------------------------------


def _canonical_classes(colors: Sequence[int], r: int) -> tuple[int, ...]:
    # number classes by decreasing size, then by smallest member
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    ordered = sorted(groups.values(), key=lambda m: (-len(m), m[0]))
    out = [0] * len(colors)
    for new, members in enumerate(ordered):
        for v in members:
            out[v] = new
    return tuple(out)


def proper_r_coloring(g: Graph, r: int) -> Partition | None:
    """Find an r-partition without internal edges, or None.

    Vertices are coloured in order of decreasing degree; a vertex may open at
    most one new colour.  Classes of the result are numbered by decreasing
    size (ties: smallest member first).
    """
    if r < 1:
        raise ValueError("r must be positive")
    n = g.n
    if n == 0:
        return Partition((), r, 0)
    order = sorted(range(n), key=lambda v: (-g.rows[v].bit_count(), v))
    masks = [0] * r
    colors = [-1] * n

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        row = g.rows[v]
        for c in range(min(used + 1, r)):
            if row & masks[c]:
                continue
            masks[c] |= 1 << v
            colors[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            masks[c] &= ~(1 << v)
        colors[v] = -1
        return False

    if not place(0, 0):
        return None
    return Partition(_canonical_classes(colors, r), r, 0)


def is_r_partite(g: Graph, r: int) -> bool:
    return proper_r_coloring(g, r) is not None

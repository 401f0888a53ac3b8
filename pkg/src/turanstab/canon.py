"""Canonical labelling by partition refinement and a full search tree.

The search individualises vertices of the first smallest non-singleton cell,
refines to an equitable partition, and scores every discrete leaf by the
relabelled upper triangle.  The best leaf is the one whose relabelled edge
list is lexicographically least.  Automorphisms found along the way (two
leaves with equal score) prune the tree as in McKay's scheme; they never
change which leaf wins, only how many leaves are visited.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, _bits


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class certificate: vertex count plus the relabelled
    edge list under the canonical permutation."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(rows: Sequence[int], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    """Refine an ordered partition until it is equitable with respect to every
    splitter.  Fragments are ordered by ascending neighbour count, which keeps
    the procedure label-invariant."""
    pending = list(splitters)
    head = 0
    while head < len(pending):
        w = pending[head]
        head += 1
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((rows[v] & w).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            for k in sorted(groups):
                frag = groups[k]
                out.append(frag)
                pending.append(_mask(frag))
        cells = out
        if len(cells) == len(rows):
            break
    return cells


def _leaf_key(rows: Sequence[int], order: Sequence[int]) -> int:
    # bit string of the relabelled upper triangle in row-major order; the
    # largest integer is the lexicographically least sorted edge list
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = n - 1 - i
    key = 0
    for i, v in enumerate(order):
        row = 0
        for w in _bits(rows[v]):
            row |= 1 << pos[w]
        width = n - 1 - i
        key = (key << width) | (row & ((1 << width) - 1))
    return key


class _Orbits:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def canonical_labeling(g: Graph) -> tuple[int, list[int], list[list[int]]]:
    """Return ``(key, order, generators)``.

    ``order[i]`` is the original vertex that receives canonical label ``i``;
    ``key`` encodes the canonical upper triangle; ``generators`` are the
    automorphisms discovered during the search (as image lists).
    """
    n = g.n
    rows = g.rows
    if n == 0:
        return 0, [], []
    root = _refine(rows, [list(range(n))], [(1 << n) - 1])

    best_key = -1
    best_order: list[int] = []
    best_path: list[int] = []
    first_key = -1
    first_order: list[int] = []
    first_path: list[int] = []
    gens: list[list[int]] = []

    def automorphism(src: Sequence[int], dst: Sequence[int]) -> list[int]:
        gamma = [0] * n
        for a, b in zip(src, dst):
            gamma[a] = b
        return gamma

    def common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
        k = 0
        for x, y in zip(a, b):
            if x != y:
                break
            k += 1
        return k

    def visit(cells: list[list[int]], path: list[int]) -> int | None:
        nonlocal best_key, best_order, best_path, first_key, first_order, first_path
        depth = len(path)
        if len(cells) == n:
            order = [c[0] for c in cells]
            key = _leaf_key(rows, order)
            if first_key < 0:
                first_key, first_order, first_path = key, order, list(path)
                best_key, best_order, best_path = key, order, list(path)
                return None
            if key == first_key:
                gens.append(automorphism(first_order, order))
                return common_prefix(path, first_path)
            if key == best_key:
                gens.append(automorphism(best_order, order))
                return common_prefix(path, best_path)
            if key > best_key:
                best_key, best_order, best_path = key, order, list(path)
            return None

        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        cell = cells[idx]
        tried: list[int] = []
        used_gens = -1
        orbits = None
        for v in cell:
            if tried:
                if used_gens != len(gens):
                    orbits = _Orbits(n)
                    for gamma in gens:
                        if all(gamma[p] == p for p in path):
                            for a in range(n):
                                orbits.union(a, gamma[a])
                    used_gens = len(gens)
                root_v = orbits.find(v)
                if any(orbits.find(t) == root_v for t in tried):
                    continue
            rest = [w for w in cell if w != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            child = _refine(rows, child, [1 << v])
            path.append(v)
            jump = visit(child, path)
            path.pop()
            tried.append(v)
            if jump is not None and jump < depth:
                return jump
        return None

    visit(root, [])
    return best_key, best_order, gens


def canonical_form(g: Graph) -> CanonicalForm:
    """Certificate equal for two graphs iff they are isomorphic."""
    _, order, _ = canonical_labeling(g)
    label = [0] * g.n
    for i, v in enumerate(order):
        label[v] = i
    edges = sorted(tuple(sorted((label[u], label[v]))) for u, v in g.edges())
    return CanonicalForm(g.n, tuple(edges))


def canonical_key(g: Graph) -> tuple[int, int]:
    """Compact hashable certificate ``(n, key)`` used on hot paths; equal iff
    the graphs are isomorphic."""
    key, _, _ = canonical_labeling(g)
    return g.n, key


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_key(g) == canonical_key(h)

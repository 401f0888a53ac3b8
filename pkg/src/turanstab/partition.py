"""Distance to r-partite: exact solvers, local search and symmetrization."""

from __future__ import annotations

import time
from functools import lru_cache
from typing import Mapping, NamedTuple

import numpy as np

from .constructions import BlowupSpec, PentagonalSpec, blowup
from .graph import Graph, Partition, _bits, degeneracy_order

# r -> largest n for which r**(n-1) assignments are enumerated
BRUTE_FORCE_CAP = {1: 64, 2: 14, 3: 10, 4: 10}
DEFAULT_BRUTE_FORCE_CAP = 8


class DrResult(NamedTuple):
    value: int
    partition: Partition
    exact: bool = True


class CapExceeded(ValueError):
    pass


def _trivial(g: Graph, r: int) -> DrResult | None:
    if r < 1:
        raise ValueError("r must be positive")
    if r == 1:
        return DrResult(g.edge_count, Partition((0,) * g.n, 1, g.edge_count))
    if g.n <= r:
        return DrResult(0, Partition(tuple(range(g.n)), r, 0))
    return None


@lru_cache(maxsize=16)
def _assignments(n: int, r: int) -> np.ndarray:
    # every class vector with vertex 0 pinned to class 0, lexicographic order
    rest = np.indices((r,) * (n - 1), dtype=np.int8).reshape(n - 1, -1).T
    return np.hstack([np.zeros((rest.shape[0], 1), dtype=np.int8), rest])


def dr_bruteforce(g: Graph, r: int) -> DrResult:
    """Minimum internal-edge count over all r-partitions, by enumeration."""
    done = _trivial(g, r)
    if done is not None:
        return done
    cap = BRUTE_FORCE_CAP.get(r, DEFAULT_BRUTE_FORCE_CAP)
    if g.n > cap:
        raise CapExceeded(f"brute force limited to n <= {cap} for r={r} (got n={g.n})")
    table = _assignments(g.n, r)
    internal = np.zeros(table.shape[0], dtype=np.int32)
    for u, v in g.edges():
        internal += table[:, u] == table[:, v]
    best = int(np.argmin(internal))
    return DrResult(int(internal[best]), Partition(tuple(int(c) for c in table[best]), r, int(internal[best])))


class _Timeout(Exception):
    pass


def dr_exact(g: Graph, r: int, time_budget: float | None = None) -> DrResult:
    """Exact D_r(g) by branch and bound.

    Vertices are assigned in degeneracy order; vertex i may open at most one
    new class.  The bound adds, for every unassigned vertex, the cheapest
    class given its already-assigned neighbours.  If ``time_budget`` (seconds)
    runs out, the best partition found so far is returned with
    ``exact=False``.
    """
    done = _trivial(g, r)
    if done is not None:
        return done
    n = g.n
    rows = g.rows
    start = max_crossing_extend(g, r, {})
    best = [start.internal, list(start.classes)]
    if best[0] == 0:
        return DrResult(0, start)

    order = degeneracy_order(g)
    cnt = [[0] * r for _ in range(n)]
    assigned = [False] * n
    cls = [-1] * n
    deadline = None if time_budget is None else time.perf_counter() + time_budget
    nodes = [0]

    def go(i: int, used: int, cost: int, lb_rest: int) -> None:
        # lb_rest: sum over unassigned vertices of min class count
        if i == n:
            if cost < best[0]:
                best[0] = cost
                best[1] = cls[:]
            return
        nodes[0] += 1
        if deadline is not None and nodes[0] & 1023 == 0 and time.perf_counter() > deadline:
            raise _Timeout
        v = order[i]
        cv = cnt[v]
        base_lb = lb_rest - min(cv)
        limit = min(used + 1, r)
        choices = sorted(range(limit), key=lambda c: (cv[c], c))
        nbrs = [w for w in _bits(rows[v]) if not assigned[w]]
        assigned[v] = True
        for c in choices:
            new_cost = cost + cv[c]
            if new_cost + base_lb >= best[0]:
                break
            delta = 0
            for w in nbrs:
                cw = cnt[w]
                old = min(cw)
                cw[c] += 1
                delta += min(cw) - old
            if new_cost + base_lb + delta < best[0]:
                cls[v] = c
                go(i + 1, max(used, c + 1), new_cost, base_lb + delta)
            for w in nbrs:
                cnt[w][c] -= 1
        assigned[v] = False
        cls[v] = -1

    exact = True
    try:
        go(0, 0, 0, 0)
    except _Timeout:
        exact = False
    value, classes = best
    return DrResult(value, Partition(tuple(classes), r, value), exact)


def ptg_dr(spec: PentagonalSpec) -> DrResult:
    """D_r of a pentagonal r-partite graph: x*y, witnessed by the standard
    partition."""
    if not spec.is_pent_r_partite:
        raise ValueError(f"{spec} is not pentagonal r-partite (need x <= y <= z_i)")
    part = spec.standard_partition()
    return DrResult(spec.x * spec.y, part)


def max_crossing_extend(g: Graph, r: int, fixed: Mapping[int, int]) -> Partition:
    """Extend a partial assignment to an r-partition that no single move of an
    unfixed vertex can improve.

    Unfixed vertices are first placed greedily (degree-descending) into the
    class holding fewest of their neighbours, ties going to the currently
    smaller class and then the lower index, then moved one at a time until
    every unfixed vertex sits in a class where it has the minimum number of
    neighbours.
    """
    n = g.n
    cls = [-1] * n
    masks = [0] * r
    for v, c in fixed.items():
        if not 0 <= c < r:
            raise ValueError(f"class {c} of vertex {v} outside [0, {r})")
        cls[v] = c
        masks[c] |= 1 << v
    free = [v for v in range(n) if v not in fixed]
    for v in sorted(free, key=lambda v: (-g.rows[v].bit_count(), v)):
        row = g.rows[v]
        c = min(range(r), key=lambda c: ((row & masks[c]).bit_count(), masks[c].bit_count(), c))
        cls[v] = c
        masks[c] |= 1 << v
    moved = True
    while moved:
        moved = False
        for v in free:
            row = g.rows[v]
            counts = [(row & masks[c]).bit_count() for c in range(r)]
            cur = cls[v]
            target = min(range(r), key=lambda c: (counts[c], c))
            if counts[target] < counts[cur]:
                masks[cur] &= ~(1 << v)
                masks[target] |= 1 << v
                cls[v] = target
                moved = True
    return Partition.of(g, cls, r)


def satisfies_local_optimality(g: Graph, p: Partition, vertices) -> bool:
    """Every listed vertex has the minimum number of neighbours in its own class."""
    masks = p.masks()
    for v in vertices:
        row = g.rows[v]
        counts = [(row & m).bit_count() for m in masks]
        if counts[p.classes[v]] != min(counts):
            return False
    return True


def symmetrize(spec: BlowupSpec, p: Partition) -> tuple[BlowupSpec, Partition]:
    """Turn an r-partition of a blowup into a blowup of an r-partite subgraph
    of the base, without losing crossing edges.

    The internal edges of ``p`` are deleted; then for each base vertex in
    index order, the vertex of largest current degree in its part (lowest
    index on ties) donates its neighbourhood and class to every other vertex
    of the part.
    """
    h = blowup(spec)
    if p.r < 1 or len(p.classes) != h.n:
        raise ValueError("partition does not match the blowup")
    cls = list(p.classes)
    masks = p.masks()
    rows = [h.rows[v] & ~masks[cls[v]] for v in range(h.n)]
    parts: list[list[int]] = []
    start = 0
    for s in spec.sizes:
        parts.append(list(range(start, start + s)))
        start += s
    for members in parts:
        if len(members) < 2:
            continue
        keep = max(members, key=lambda v: (rows[v].bit_count(), -v))
        for w in members:
            if w == keep:
                continue
            for x in _bits(rows[w]):
                rows[x] &= ~(1 << w)
            rows[w] = rows[keep]
            for x in _bits(rows[keep]):
                rows[x] |= 1 << w
            cls[w] = cls[keep]
    k = spec.base.n
    rep = [m[0] if m else None for m in parts]
    new_edges = [
        (i, j)
        for i, j in spec.base.edges()
        if rep[i] is not None and rep[j] is not None and rows[rep[i]] >> rep[j] & 1
    ]
    new_spec = BlowupSpec(Graph.from_edges(k, new_edges), spec.sizes)
    out = blowup(new_spec)
    if out.rows != tuple(rows):
        raise AssertionError("symmetrized graph is not a blowup")
    return new_spec, Partition.of(out, cls, p.r)

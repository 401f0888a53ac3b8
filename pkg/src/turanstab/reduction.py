"""From a near-extremal K_{r+1}-free graph to a dominating pentagonal spec.

Two routes are implemented.  ``dense_reduce`` handles graphs that become
r-partite after deleting one vertex v: with U_1..U_r the parts of G - v and
a_i = |N(v) & U_i| sorted ascending, the candidate is
L_r[1, a_1, a_1, n_1 - a_1, n_2 - a_1, n_3, ..., n_r].  ``general_reduce``
peels low-degree vertices, extends a proper colouring of the rest to a
locally max-cut partition, and reads the candidate
L_r[k, Delta, Delta, z_1, ..., z_r] off a matching of internal edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .constructions import PentagonalSpec, ptg_build, turan_spec
from .graph import Graph, Partition, has_clique, proper_r_coloring
from .graph6 import encode_graph6
from .matching import find_matching
from .partition import dr_exact, max_crossing_extend, ptg_dr, satisfies_local_optimality
from .verify import near_partite_witness


class ReductionError(ValueError):
    """The pipeline cannot proceed on this instance (a hypothesis failed)."""


class ReductionInapplicable(ReductionError):
    pass


@dataclass
class DominationResult:
    spec: PentagonalSpec
    e_g: int
    e_spec: int
    dr_g: int
    dr_spec: int
    exact: bool = True

    @property
    def dominates(self) -> bool:
        return self.e_spec >= self.e_g and self.dr_spec >= self.dr_g

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "e_G": self.e_g,
            "e_spec": self.e_spec,
            "dr_G": self.dr_g,
            "dr_spec": self.dr_spec,
            "dominates": self.dominates,
            "exact": self.exact,
        }


def check_domination(g: Graph, spec: PentagonalSpec, r: int, dr_g: int | None = None) -> DominationResult:
    """Compare edge counts and D_r of ``g`` and the graph built from ``spec``."""
    if spec.n != g.n:
        raise ValueError(f"vertex counts differ: graph has {g.n}, spec has {spec.n}")
    exact = True
    if dr_g is None:
        res = dr_exact(g, r)
        dr_g, exact = res.value, res.exact
    if spec.is_pent_r_partite:
        dr_spec = ptg_dr(spec).value
    else:
        res = dr_exact(ptg_build(spec), r)
        dr_spec, exact = res.value, exact and res.exact
    return DominationResult(spec, g.edge_count, spec.edge_count(), dr_g, dr_spec, exact)


@dataclass
class PeelResult:
    removed: tuple[int, ...]
    kept: tuple[int, ...]
    residual: Graph


def weeding_peel(g: Graph, r: int, threshold) -> PeelResult:
    """Repeatedly delete the lowest-indexed vertex of current degree below
    ``threshold`` (strict inequality)."""
    threshold = Fraction(threshold)
    if threshold < 0:
        raise ValueError("threshold must be nonnegative")
    alive = (1 << g.n) - 1
    removed = []
    progress = True
    while progress:
        progress = False
        for v in range(g.n):
            if alive >> v & 1 and (g.rows[v] & alive).bit_count() < threshold:
                alive &= ~(1 << v)
                removed.append(v)
                progress = True
                break
    kept = tuple(v for v in range(g.n) if alive >> v & 1)
    return PeelResult(tuple(removed), kept, g.induced(kept))


def asymptotic_peel_threshold(r: int, n: int) -> Fraction:
    """n((r-1)/r - r^-10), the asymptotic peeling threshold."""
    return n * (Fraction(r - 1, r) - Fraction(1, r**10))


# -- dense case --------------------------------------------------------------


@dataclass
class DenseReduction:
    result: DominationResult
    vertex: int | None = None
    a: tuple[int, ...] = ()
    part_sizes: tuple[int, ...] = ()

    @property
    def pentagonal(self) -> bool:
        """Whether min n_i >= 2 a_1, the condition making the spec pentagonal."""
        return not self.a or min(self.part_sizes) >= 2 * self.a[0]


def dense_reduce(g: Graph, r: int, dr_g: int | None = None) -> DenseReduction:
    if has_clique(g, r + 1):
        raise ValueError(f"graph contains K_{r + 1}")
    if proper_r_coloring(g, r) is not None:
        spec = turan_spec(r, g.n)
        return DenseReduction(check_domination(g, spec, r, dr_g=0))
    v = near_partite_witness(g, r)
    if v is None:
        raise ReductionInapplicable("no single-vertex deletion leaves an r-partite graph")
    rest = [w for w in range(g.n) if w != v]
    colouring = proper_r_coloring(g.induced(rest), r)
    sizes = [0] * r
    a = [0] * r
    for i, w in enumerate(rest):
        c = colouring.classes[i]
        sizes[c] += 1
        if g.has_edge(v, w):
            a[c] += 1
    order = sorted(range(r), key=lambda c: a[c])  # stable: ties keep class order
    a = [a[c] for c in order]
    sizes = [sizes[c] for c in order]
    spec = PentagonalSpec(r, 1, a[0], (sizes[0] - a[0], sizes[1] - a[0]) + tuple(sizes[2:]))
    return DenseReduction(check_domination(g, spec, r, dr_g=dr_g), v, tuple(a), tuple(sizes))


# -- general case ------------------------------------------------------------


@dataclass
class ReductionState:
    r: int
    removed: tuple[int, ...]
    augmented: tuple[int, ...]
    partition: Partition
    delta: int
    u: int | None
    P: list[list[int]] = field(default_factory=list)
    M: list[tuple[int, int]] = field(default_factory=list)
    A: list[list[tuple[int, int]]] = field(default_factory=list)
    B: list[list[tuple[int, int]]] = field(default_factory=list)
    C: list[list[tuple[int, int]]] = field(default_factory=list)
    kappa: list[int] = field(default_factory=list)
    class_order: list[int] = field(default_factory=list)
    internal_edges: int = 0
    hypotheses: dict = field(default_factory=dict)

    @property
    def k(self) -> int:
        return len(self.M)

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.r
        for c in self.partition.classes:
            sizes[c] += 1
        return [sizes[c] for c in self.class_order]

    def check_bookkeeping(self) -> list[str]:
        """Identities the construction relies on; empty list if all hold."""
        problems = []
        sizes = self.class_sizes()
        for i in range(self.r):
            a, b = len(self.A[i]), len(self.B[i])
            if sizes[i] != self.kappa[i] + self.delta + 2 * a + b:
                problems.append(f"|V_{i + 1}| != kappa + Delta + 2a + b")
        if sum(len(x) for x in self.A + self.B + self.C) != self.k:
            problems.append("k != a + b + c")
        if sum(sizes) != len(self.partition.classes):
            problems.append("class sizes do not cover the vertex set")
        return problems

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "S": sorted(self.removed + self.augmented),
            "S_peeled": list(self.removed),
            "classes": list(self.partition.classes),
            "class_order": self.class_order,
            "Delta": self.delta,
            "u": self.u,
            "P": self.P,
            "M": [list(e) for e in self.M],
            "a": [len(x) for x in self.A],
            "b": [len(x) for x in self.B],
            "c": [len(x) for x in self.C],
            "k": self.k,
            "kappa": self.kappa,
            "internal_edges": self.internal_edges,
            "hypotheses": self.hypotheses,
        }


def _partite_core(g: Graph, r: int, peel: PeelResult, strict: bool) -> tuple[list[int], Partition]:
    """Vertices outside S together with a proper colouring of them.

    If the residual is not r-partite and ``strict`` is off, more vertices are
    moved into S: first a single near-partite witness, otherwise repeatedly a
    minimum-degree vertex (lowest index).
    """
    kept = list(peel.kept)
    colouring = proper_r_coloring(peel.residual, r)
    if colouring is not None:
        return kept, colouring
    if strict:
        raise ReductionError("residual not r-partite at this threshold")
    residual = peel.residual
    v = near_partite_witness(residual, r)
    if v is not None:
        kept.pop(v)
        return kept, proper_r_coloring(g.induced(kept), r)
    while True:
        h = g.induced(kept)
        degs = h.degrees()
        i = min(range(len(kept)), key=lambda i: (degs[i], kept[i]))
        kept.pop(i)
        colouring = proper_r_coloring(g.induced(kept), r)
        if colouring is not None:
            return kept, colouring


def general_reduce(g: Graph, r: int, threshold=0, strict: bool = False) -> tuple[ReductionState, DominationResult]:
    """Build the matching-based pentagonal candidate for ``g``.

    Raises ``ReductionError`` when an in-instance hypothesis fails: residual
    not r-partite (strict mode only), fewer than Delta neighbours of u in
    some class, no k-matching among internal edges, or a negative part.
    """
    if has_clique(g, r + 1):
        raise ValueError(f"graph contains K_{r + 1}")
    n = g.n
    peel = weeding_peel(g, r, threshold)
    kept, colouring = _partite_core(g, r, peel, strict)
    fixed = {v: colouring.classes[i] for i, v in enumerate(kept)}
    part = max_crossing_extend(g, r, fixed)
    kept_set = set(kept)
    S = [v for v in range(n) if v not in kept_set]
    augmented = tuple(v for v in S if v not in peel.removed)
    masks = part.masks()
    cls = part.classes
    internal_deg = [(g.rows[v] & masks[cls[v]]).bit_count() for v in range(n)]
    delta = max(internal_deg, default=0)
    hyp = {
        "peel_threshold": str(Fraction(threshold)),
        "S_size": len(S),
        "local_optimality_on_S": satisfies_local_optimality(g, part, S),
    }
    if delta == 0:
        state = ReductionState(r, peel.removed, augmented, part, 0, None, [[] for _ in range(r)],
                               [], [[] for _ in range(r)], [[] for _ in range(r)], [[] for _ in range(r)],
                               [], list(range(r)), 0, hyp)
        sizes = [0] * r
        for c in cls:
            sizes[c] += 1
        state.kappa = sizes
        spec = turan_spec(r, n)
        return state, check_domination(g, spec, r)
    # prefer a maximum-internal-degree vertex inside S, then lowest index
    u = min((v for v in range(n) if internal_deg[v] == delta), key=lambda v: (v not in S, v))
    P = []
    for i in range(r):
        nb = [w for w in range(n) if cls[w] == i and g.has_edge(u, w)]
        if len(nb) < delta:
            raise ReductionError(f"P_{i + 1} infeasible: u has {len(nb)} < Delta={delta} neighbours in V_{i + 1}")
        P.append(nb[:delta])
    internal = [(a, b) for a, b in g.edges() if cls[a] == cls[b]]
    H = Graph.from_edges(n, internal)
    k = -(-len(internal) // delta)
    hyp["u_in_S"] = u in S
    hyp["delta_ge_6S"] = delta >= 6 * len(S)
    hyp["matching_lemma_hypotheses"] = len(internal) > (k - 1) * delta and delta >= 2 * k - 1
    M = find_matching(H, k)
    if M is None:
        raise ReductionError(f"no matching of size k={k} among {len(internal)} internal edges")
    A = [[] for _ in range(r)]
    B = [[] for _ in range(r)]
    C = [[] for _ in range(r)]
    covered = [set() for _ in range(r)]
    Pset = [set(p) for p in P]
    for a, b in M:
        i = cls[a]
        inside = (a in Pset[i]) + (b in Pset[i])
        (A, B, C)[inside][i].append((a, b))
        covered[i].update((a, b))
    kappa = [sum(1 for w in range(n) if cls[w] == i and w not in Pset[i] and w not in covered[i]) for i in range(r)]
    order = sorted(range(r), key=lambda i: kappa[i])  # stable
    A = [A[i] for i in order]
    B = [B[i] for i in order]
    C = [C[i] for i in order]
    P = [P[i] for i in order]
    kappa = [kappa[i] for i in order]
    a = [len(x) for x in A]
    b = [len(x) for x in B]
    c = [len(x) for x in C]
    z1 = kappa[0] + a[0] - c[0]
    z2 = kappa[1] + a[0] + b[0] + c[0] + 2 * a[1] + b[1] - k
    rest = [kappa[j] + delta + 2 * a[j] + b[j] for j in range(2, r)]
    state = ReductionState(r, peel.removed, augmented, part, delta, u, P, M, A, B, C, kappa, order,
                           len(internal), hyp)
    hyp["kappa_1_ge_4Delta"] = kappa[0] >= 4 * delta
    if z1 < 0 or z2 < 0:
        raise ReductionError(f"negative part size (z_1={z1}, z_2={z2})")
    spec = PentagonalSpec(r, k, delta, (z1, z2) + tuple(rest))
    if spec.n != n:
        raise ReductionError(f"vertex count not conserved: spec has {spec.n}, graph has {n}")
    return state, check_domination(g, spec, r)


# -- sweeps ------------------------------------------------------------------


def _dense_check(args):
    g, r = args
    if proper_r_coloring(g, r) is not None:
        return None
    try:
        red = dense_reduce(g, r, dr_g=-1)
    except ReductionInapplicable:
        return ("skip",)
    res = red.result
    problems = []
    if res.e_spec < res.e_g:
        problems.append("e(spec) < e(G)")
    if red.pentagonal:
        dr_g = dr_exact(g, r).value
        if not (res.spec.is_pent_r_partite and res.dr_spec == red.a[0] and res.dr_spec >= dr_g):
            problems.append("D_r(spec) != a_1 or < D_r(G)")
    return ("ok" if not problems else "bad", red.pentagonal, encode_graph6(g) if problems else None, problems)


def dense_reduction_sweep(graphs: Sequence[Graph] | object, r: int, workers: int = 1) -> dict:
    """Run the dense reduction on every non-r-partite graph that admits a
    near-partite witness, checking e(spec) >= e(G) always and
    D_r(spec) = a_1 >= D_r(G) when min n_i >= 2 a_1."""
    from ._parallel import pmap

    stats = {"graphs": 0, "applicable": 0, "pentagonal": 0, "inapplicable": 0, "violations": []}
    for out in pmap(_dense_check, ((g, r) for g in graphs), workers):
        stats["graphs"] += 1
        if out is None:
            continue
        if out[0] == "skip":
            stats["inapplicable"] += 1
            continue
        stats["applicable"] += 1
        stats["pentagonal"] += out[1]
        if out[0] == "bad":
            stats["violations"].append({"graph6": out[2], "problems": out[3]})
    return stats

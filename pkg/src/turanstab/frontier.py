"""Exact stability frontier at small n and the pentagonal-Turán optimizer."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from dataclasses import dataclass
from math import isqrt, sqrt
from typing import Iterable, Iterator

from ._parallel import pmap
from .constructions import PentagonalSpec, turan_graph, turan_number
from .enumeration import EnumSpec, enumerate_clique_free
from .graph import Graph, is_r_partite
from .graph6 import encode_graph6
from .partition import dr_exact
from .verify import VerificationReport


@dataclass(frozen=True)
class FrontierRecord:
    """f = max D_r over K_{r+1}-free graphs on n vertices with at least
    t_r(n) - t edges, with one maximizer as witness (graph6)."""

    r: int
    n: int
    t: int
    f: int
    witness: str | None

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "t": self.t, "f": self.f, "witness": self.witness}


def _dr_if_not_partite(args) -> int:
    g, r = args
    return 0 if is_r_partite(g, r) else dr_exact(g, r).value


def frontier_table(r: int, n: int, t_values: Iterable[int], workers: int = 1,
                   cap: int | None = None) -> list[FrontierRecord]:
    """Frontier records for several t from a single enumeration.

    Among graphs attaining the maximum, the witness is the first one in
    enumeration order; when no graph needs deletions the witness is T_r(n).
    """
    t_values = list(t_values)
    if not t_values:
        return []
    t_rn = turan_number(r, n)
    floor = max(0, t_rn - max(t_values))
    graphs = list(enumerate_clique_free(EnumSpec(n, r + 1, floor), cap=cap))
    drs = list(pmap(_dr_if_not_partite, ((g, r) for g in graphs), workers, chunksize=64))
    turan_g6 = encode_graph6(turan_graph(r, n))
    out = []
    for t in t_values:
        best, witness = 0, None
        pool = False
        for g, d in zip(graphs, drs):
            if g.edge_count < t_rn - t:
                continue
            pool = True
            if d > best:
                best, witness = d, g
        if best == 0:
            out.append(FrontierRecord(r, n, t, 0, turan_g6 if pool else None))
        else:
            out.append(FrontierRecord(r, n, t, best, encode_graph6(witness)))
    return out


def frontier(r: int, n: int, t: int, workers: int = 1, cap: int | None = None) -> FrontierRecord:
    return frontier_table(r, n, [t], workers, cap)[0]


def frontier_csv(records: Iterable[FrontierRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["r", "n", "t", "f", "witness_graph6"])
    for rec in records:
        w.writerow([rec.r, rec.n, rec.t, rec.f, rec.witness or ""])
    return buf.getvalue()


def frontier_json(records: Iterable[FrontierRecord]) -> str:
    return json.dumps([rec.to_json() for rec in records], sort_keys=True)


# -- pentagonal-Turán optimization --------------------------------------------


@dataclass(frozen=True)
class PtgOptimum:
    spec: PentagonalSpec
    dr: int
    edges: int
    asymptotic: float | None = None

    def to_json(self) -> dict:
        return {"spec": self.spec.to_json(), "dr": self.dr, "edges": self.edges,
                "asymptotic": self.asymptotic}


def _sum_assignments(r: int, n: int, x: int) -> list[tuple[int, int, tuple[int, ...]]]:
    """Ways to hand out the balanced sums: (s_1, s_2, (z_3, ..., z_r)).

    The multiset of sums is fixed by n + x; only how many of the two
    pentagon sums get the larger value matters (the pentagon is symmetric
    under swapping its two sides, so the larger one goes to s_1).
    """
    q, rem = divmod(n + x, r)
    out = []
    for c in (2, 1, 0):
        if c > rem or rem - c > r - 2:
            continue
        s1 = q + (1 if c >= 1 else 0)
        s2 = q + (1 if c == 2 else 0)
        big = rem - c
        tail = (q + 1,) * big + (q,) * (r - 2 - big)
        out.append((s1, s2, tail))
    return out


def _spec(r, x, y, s1, s2, tail) -> PentagonalSpec | None:
    z1, z2 = s1 - x - y, s2 - x - y
    if min((z1, z2) + tail) < y:
        return None
    return PentagonalSpec(r, x, y, (z1, z2) + tail)


def ptt_candidates(r: int, n: int) -> Iterator[PentagonalSpec]:
    """Every pentagonal-Turán spec on n vertices (up to the pentagon swap and
    the order of z_3, ..., z_r)."""
    for x in range(n + 1):
        for s1, s2, tail in _sum_assignments(r, n, x):
            for y in range(x, n + 1):
                spec = _spec(r, x, y, s1, s2, tail)
                if spec is None:
                    break
                yield spec


def optimize_ptg(r: int, n: int, min_edges: int) -> PtgOptimum:
    """Maximize x*y over pentagonal-Turán specs with at least ``min_edges``
    edges.  Ties go to more edges, then to the smallest (x, y).

    For fixed x and fixed assignment of sums, the edge count drops by
    2(y - x) + 1 when y grows by one, so the best y is the largest one that
    still meets the budget and keeps y <= z_i; it is found by bisection.
    Since such a spec misses at least y^2 edges of T_r(n), only
    y <= sqrt(t_r(n) - min_edges) can qualify.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    t_rn = turan_number(r, n)
    if min_edges > t_rn:
        raise ValueError(f"infeasible budget: min_edges={min_edges} exceeds t_r(n)={t_rn}")
    y_cap = min(n, isqrt(max(0, t_rn - min_edges)))
    best = None
    best_key = None
    for x in range(y_cap + 1):
        for s1, s2, tail in _sum_assignments(r, n, x):
            lo_spec = _spec(r, x, x, s1, s2, tail)
            if lo_spec is None or lo_spec.edge_count() < min_edges:
                continue
            # x = 0 gives D_r = 0 for every y, and y = 0 has the most edges
            hi = 0 if x == 0 else min((s1 - x) // 2, (s2 - x) // 2, min(tail, default=n), y_cap)
            lo = x
            while lo < hi:
                mid = (lo + hi + 1) // 2
                spec = _spec(r, x, mid, s1, s2, tail)
                if spec is not None and spec.edge_count() >= min_edges:
                    lo = mid
                else:
                    hi = mid - 1
            spec = _spec(r, x, lo, s1, s2, tail)
            e = spec.edge_count()
            key = (x * lo, e, -x, -lo)
            if best_key is None or key > best_key:
                best, best_key = spec, key
    return PtgOptimum(best, best.x * best.y, best.edge_count())


def asymptotic_dr(r: int, n: float, delta: float) -> float:
    """(2r / (3 sqrt 3)) delta^{3/2} n^2."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return 2 * r / (3 * sqrt(3)) * delta**1.5 * n * n


def asymptotic_shape(r: int, n: float, delta: float) -> tuple[float, float]:
    """Optimal (x, y) to first order: ((2r/3) delta n, sqrt(delta/3) n)."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return 2 * r / 3 * delta * n, sqrt(delta / 3) * n


def optimize_for_delta(r: int, n: int, delta) -> PtgOptimum:
    """optimize_ptg with budget t_r(n) - ceil(delta n^2), annotated with the
    asymptotic estimate.  ``delta`` may be a Fraction for an exact budget."""
    d = Fraction(delta)
    missing = -(-(d.numerator * n * n) // d.denominator)
    opt = optimize_ptg(r, n, turan_number(r, n) - missing)
    return PtgOptimum(opt.spec, opt.dr, opt.edges, asymptotic_dr(r, n, float(d)))


# -- domination of small triangle-free graphs ---------------------------------


def _best_dr_per_edges(candidates: Iterable[PentagonalSpec]) -> list[tuple[int, int]]:
    """Pareto front (edges descending, best dr) of the candidate specs."""
    pts = sorted(((s.edge_count(), s.x * s.y) for s in candidates), reverse=True)
    front = []
    best = -1
    for e, d in pts:
        if d > best:
            front.append((e, d))
            best = d
    return front


def _egs_check(args):
    g, r = args
    if is_r_partite(g, r):
        return g.edge_count, 0
    return g.edge_count, dr_exact(g, r).value


def egs_domination_sweep(n: int, r: int = 2, t: int | None = None, workers: int = 1,
                         cap: int | None = None) -> VerificationReport:
    """Every K_{r+1}-free graph with at least t_r(n) - t edges (default
    t = floor(n^2/20)) is dominated in edges and D_r by a pentagonal-Turán
    spec on n vertices."""
    if t is None:
        t = n * n // 20
    t_rn = turan_number(r, n)
    floor = max(0, t_rn - t)
    front = _best_dr_per_edges(ptt_candidates(r, n))
    rep = VerificationReport("egs-domination", {"r": r, "n": n, "t": t})
    graphs = list(enumerate_clique_free(EnumSpec(n, r + 1, floor), cap=cap))
    checked = pmap(_egs_check, ((g, r) for g in graphs), workers, chunksize=64)
    worst = 0
    for g, (e, d) in zip(graphs, checked):
        rep.instances += 1
        worst = max(worst, d)
        if not any(fe >= e and fd >= d for fe, fd in front):
            rep.counterexamples.append({"graph6": encode_graph6(g), "edges": e, "dr": d})
    rep.notes = {"edge_floor": floor, "max_dr": worst, "pareto_front": [list(p) for p in front]}
    return rep

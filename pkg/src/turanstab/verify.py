"""Exhaustive checks of the finite statements the reduction relies on."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import comb

import numpy as np

from ._parallel import pmap
from .constructions import (
    PentagonalSpec,
    complete_multipartite,
    ptg_build,
    sample_ptg,
    turan_number,
)
from .enumeration import EnumSpec, enumerate_clique_free
from .graph import Graph, has_clique, is_r_partite
from .graph6 import encode_graph6
from .matching import find_matching, is_matching
from .partition import dr_exact, ptg_dr

FOLKLORE_EDGE_CAP = 20


@dataclass
class VerificationReport:
    statement: str
    grid: dict
    instances: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "statement": self.statement,
            "grid": self.grid,
            "instances": self.instances,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }


# -- Turán number identities -------------------------------------------------


def _sample_points(n: int, count: int) -> list[int]:
    if n + 1 <= count:
        return list(range(n + 1))
    return sorted({(i * n) // (count - 1) for i in range(count)})


def verify_turan_identities(r_values=range(2, 9), n_max: int = 500, samples: int = 50) -> VerificationReport:
    """Check the three Turán-number relations in exact integer arithmetic:

    1. t(n) - t(n-1) = floor((r-1)n/r) = ceil((r-1)(n-1)/r)
    2. t(n') + (r-1)/r n(n-n') >= t(n) >= t(n') + (r-1)/r n'(n-n')
    3. (r-1)/r C(n+1,2) >= t(n) >= (r-1)/r C(n,2)
    """
    rep = VerificationReport("turan-identities", {"r": list(r_values), "n_max": n_max, "samples": samples})
    for r in r_values:
        t = [turan_number(r, n) for n in range(n_max + 1)]
        for n in range(1, n_max + 1):
            rep.instances += 1
            step = t[n] - t[n - 1]
            if step != (r - 1) * n // r or step != -(-(r - 1) * (n - 1) // r):
                rep.counterexamples.append({"part": 1, "r": r, "n": n, "step": step})
            rt = r * t[n]
            if not (r - 1) * comb(n + 1, 2) >= rt >= (r - 1) * comb(n, 2):
                rep.counterexamples.append({"part": 3, "r": r, "n": n})
            for m in _sample_points(n, samples):
                rep.instances += 1
                hi = r * t[m] + (r - 1) * n * (n - m)
                lo = r * t[m] + (r - 1) * m * (n - m)
                if not hi >= rt >= lo:
                    rep.counterexamples.append({"part": 2, "r": r, "n": n, "n_prime": m})
    return rep


# -- folklore missing-edge bound ---------------------------------------------


def verify_folklore(sizes) -> VerificationReport:
    """Every K_r-free subgraph of K_{n_1..n_r} misses at least n_1*n_2 edges.

    All subsets of the crossing edges are enumerated (vectorised over bit
    masks); the report records the largest K_r-free subgraph found.
    """
    sizes = sorted(int(s) for s in sizes)
    r = len(sizes)
    if r < 2:
        raise ValueError("need at least two parts")
    g = complete_multipartite(sizes)
    edges = g.edges()
    m = len(edges)
    if m > FOLKLORE_EDGE_CAP:
        raise ValueError(f"K_n has {m} edges; subset enumeration capped at {FOLKLORE_EDGE_CAP}")
    index = {e: i for i, e in enumerate(edges)}
    parts = []
    start = 0
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    subsets = np.arange(1 << m, dtype=np.uint32)
    bad = np.zeros(subsets.shape, dtype=bool)
    for tup in itertools.product(*parts):
        mask = 0
        for u, v in itertools.combinations(tup, 2):
            mask |= 1 << index[(u, v)]
        bad |= (subsets & np.uint32(mask)) == mask
    good_sizes = np.bitwise_count(subsets[~bad])
    best = int(good_sizes.max())
    bound = m - sizes[0] * sizes[1]
    rep = VerificationReport("folklore", {"sizes": sizes, "r": r}, instances=1 << m)
    rep.notes = {"edges": m, "bound": bound, "max_kr_free": best, "attained": best == bound}
    if best > bound:
        witness = subsets[~bad][int(np.argmax(good_sizes))]
        sub = Graph.from_edges(g.n, [e for i, e in enumerate(edges) if int(witness) >> i & 1])
        rep.counterexamples.append({"graph6": encode_graph6(sub), "edges": best, "bound": bound})
    return rep


def folklore_grid(r: int, max_edges: int = 16):
    """All sorted size vectors (n_1 >= 1) whose complete r-partite graph has at
    most ``max_edges`` edges."""

    def extend(prefix):
        if len(prefix) == r:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 1
        v = lo
        while True:
            cand = prefix + [v]
            # remaining parts are at least v each
            full = cand + [v] * (r - len(cand))
            if complete_multipartite_edges(full) > max_edges:
                return
            yield from extend(cand)
            v += 1

    yield from extend([])


def complete_multipartite_edges(sizes) -> int:
    total = sum(sizes)
    return (total * total - sum(s * s for s in sizes)) // 2


# -- matching lemma ----------------------------------------------------------


def matching_hypotheses(g: Graph, k: int) -> bool:
    delta = g.max_degree()
    return g.edge_count > (k - 1) * delta and delta >= 2 * k - 1


def verify_matching(count: int = 500, seed: int = 0, max_n: int = 40, max_k: int = 8) -> VerificationReport:
    """Random graphs meeting e > (k-1)*Delta and Delta >= 2k-1 must contain a
    k-matching."""
    rng = random.Random(seed)
    rep = VerificationReport("matching", {"count": count, "seed": seed, "max_n": max_n, "max_k": max_k})
    while rep.instances < count:
        n = rng.randint(2, max_n)
        p = rng.random() ** 2
        g = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        delta = g.max_degree()
        ks = [k for k in range(1, max_k + 1) if matching_hypotheses(g, k)]
        if not ks:
            continue
        k = rng.choice(ks)
        rep.instances += 1
        m = find_matching(g, k)
        if m is None or len(m) != k or not is_matching(g, m):
            rep.counterexamples.append({"graph6": encode_graph6(g), "k": k, "max_degree": delta})
    return rep


# -- Andrásfai-Erdős-Sós and Brouwer -----------------------------------------


def _aes_check(args):
    g, r, n = args
    # exact: min degree > (3r-4)n/(3r-1)
    if g.min_degree() * (3 * r - 1) <= (3 * r - 4) * n:
        return 0, None
    if is_r_partite(g, r):
        return 1, None
    return 1, encode_graph6(g)


def verify_aes(r: int, n: int, workers: int = 1, cap: int | None = None) -> VerificationReport:
    """K_{r+1}-free graphs with minimum degree > (3r-4)n/(3r-1) are r-partite.

    Only graphs with enough edges to reach that minimum degree are generated.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    dmin = (3 * r - 4) * n // (3 * r - 1) + 1
    floor = -(-n * dmin // 2)
    rep = VerificationReport("aes", {"r": r, "n": n})
    graphs = enumerate_clique_free(EnumSpec(n, r + 1, floor), cap=cap)
    qualifying = 0
    for hit, bad in pmap(_aes_check, ((g, r, n) for g in graphs), workers):
        rep.instances += 1
        qualifying += hit
        if bad is not None:
            rep.counterexamples.append({"graph6": bad})
    rep.notes = {"min_degree_required": dmin, "edge_floor": floor, "qualifying": qualifying}
    return rep


def brouwer_threshold(r: int, n: int) -> int:
    return turan_number(r, n) - n // r + 2


def _partite_check(args):
    g, r = args
    return None if is_r_partite(g, r) else encode_graph6(g)


def verify_brouwer(r: int, n: int, workers: int = 1, cap: int | None = None) -> VerificationReport:
    """K_{r+1}-free graphs with at least t_r(n) - floor(n/r) + 2 edges are
    r-partite (n >= 2r+1)."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if n < 2 * r + 1:
        raise ValueError(f"statement needs n >= 2r+1 = {2 * r + 1}, got n={n}")
    floor = brouwer_threshold(r, n)
    rep = VerificationReport("brouwer", {"r": r, "n": n})
    graphs = enumerate_clique_free(EnumSpec(n, r + 1, floor), cap=cap)
    for bad in pmap(_partite_check, ((g, r) for g in graphs), workers):
        rep.instances += 1
        if bad is not None:
            rep.counterexamples.append({"graph6": bad})
    rep.notes = {"edge_floor": floor}
    return rep


def near_partite_witness(g: Graph, r: int) -> int | None:
    """A vertex whose deletion leaves an r-partite graph, trying low degrees
    first; None if there is none."""
    for v in sorted(range(g.n), key=lambda v: (g.degree(v), v)):
        if is_r_partite(g.delete_vertices([v]), r):
            return v
    return None


# -- pentagonal graphs -------------------------------------------------------


def pent_r_partite_specs(r: int, max_n: int):
    """Every spec with x <= y <= z_i and total size at most ``max_n``."""
    for y in range(max_n // 2 + 1):
        for x in range(y + 1):
            budget = max_n - x - 2 * y
            if budget < r * y:
                break

            def zs(prefix, left):
                if len(prefix) == r:
                    yield tuple(prefix)
                    return
                for v in range(y, left - y * (r - len(prefix) - 1) + 1):
                    yield from zs(prefix + [v], left - v)

            for z in zs([], budget):
                yield PentagonalSpec(r, x, y, z)


def _pentagonal_dr_check(spec: PentagonalSpec):
    res = dr_exact(ptg_build(spec), spec.r)
    return None if res.value == spec.x * spec.y else res.value


def verify_pentagonal_dr(r: int, max_n: int = 12, workers: int = 1) -> VerificationReport:
    """D_r(L_r[x,y,y,z]) = x*y whenever x <= y <= z_i, by the exact solver."""
    rep = VerificationReport("pentagonal-dr", {"r": r, "max_n": max_n})
    specs = list(pent_r_partite_specs(r, max_n))
    for spec, got in zip(specs, pmap(_pentagonal_dr_check, specs, workers, chunksize=16)):
        rep.instances += 1
        if got is not None:
            rep.counterexamples.append({"spec": spec.to_json(), "dr_exact": got, "xy": spec.x * spec.y})
    return rep


def verify_sample_ptg(r: int, n: int) -> VerificationReport:
    """For every 0 <= s <= n/r^4 the sampled spec is pentagonal r-partite,
    K_{r+1}-free, has at least t_r(n) - (sn/r)(1+1/r^3) edges and
    D_r = s*t >= sqrt(s^3 n)/r^2."""
    rep = VerificationReport("sample-ptg", {"r": r, "n": n})
    t_rn = turan_number(r, n)
    r4 = r**4
    for s in range(n // r4 + 1):
        rep.instances += 1
        spec = sample_ptg(r, n, s)
        problems = []
        if spec.n != n:
            problems.append("vertex count")
        if not spec.is_pent_r_partite:
            problems.append("not pentagonal r-partite")
        g = ptg_build(spec)
        if has_clique(g, r + 1):
            problems.append("contains K_{r+1}")
        e = g.edge_count
        if e != spec.edge_count():
            problems.append("closed-form edge count mismatch")
        # e >= t - (s n / r)(1 + 1/r^3)  <=>  r^4 e >= r^4 t - s n (r^3 + 1)
        if r4 * e < r4 * t_rn - s * n * (r**3 + 1):
            problems.append("edge bound")
        if not problems:
            dr = ptg_dr(spec).value
            if dr != spec.x * spec.y:
                problems.append("D_r")
            # D_r >= sqrt(s^3 n)/r^2  <=>  (D_r r^2)^2 >= s^3 n
            if (dr * r * r) ** 2 < s**3 * n:
                problems.append("D_r bound")
        if problems:
            rep.counterexamples.append({"s": s, "spec": spec.to_json(), "problems": problems})
    return rep

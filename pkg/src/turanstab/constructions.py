"""Graph families: Turán graphs, blowups, the pentagon base graph L_r and the
pentagonal r-partite / pentagonal Turán blowups built on it."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, isqrt
from typing import Sequence

from .graph import Graph, Partition


def turan_part_sizes(r: int, n: int) -> list[int]:
    """Part sizes of T_r(n), larger parts first."""
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def turan_number(r: int, n: int) -> int:
    """Exact edge count t_r(n) = C(n,2) - sum C(part, 2)."""
    if r < 1:
        raise ValueError("r must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(n, 2) - sum(comb(p, 2) for p in turan_part_sizes(r, n))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    return blowup(BlowupSpec(complete_graph(len(sizes)), tuple(sizes)))


def turan_graph(r: int, n: int) -> Graph:
    if r < 1:
        raise ValueError("r must be positive")
    return complete_multipartite(turan_part_sizes(r, n))


def turan_partition(r: int, n: int) -> Partition:
    classes = []
    for c, size in enumerate(turan_part_sizes(r, n)):
        classes.extend([c] * size)
    return Partition(tuple(classes), r, 0)


# -- small named graphs ------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel_graph(rim: int) -> Graph:
    """Cycle on vertices 0..rim-1 plus hub ``rim`` joined to all of them."""
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    return Graph.from_edges(rim + 1, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- blowups -----------------------------------------------------------------


@dataclass(frozen=True)
class BlowupSpec:
    base: Graph
    sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.sizes) != self.base.n:
            raise ValueError("one size per base vertex required")
        if any(s < 0 for s in self.sizes):
            raise ValueError("blowup sizes must be nonnegative")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def part_of(self) -> list[int]:
        """Base vertex owning each blown-up vertex (parts are contiguous)."""
        owner = []
        for i, s in enumerate(self.sizes):
            owner.extend([i] * s)
        return owner

    def edge_count(self) -> int:
        return sum(self.sizes[u] * self.sizes[v] for u, v in self.base.edges())


def blowup(spec: BlowupSpec) -> Graph:
    """Replace base vertex i by an independent set of ``sizes[i]`` vertices,
    joining two blown-up vertices iff their base vertices are adjacent."""
    masks = []
    start = 0
    for s in spec.sizes:
        masks.append(((1 << s) - 1) << start)
        start += s
    rows = []
    for i, s in enumerate(spec.sizes):
        row = 0
        for j in range(spec.base.n):
            if spec.base.rows[i] >> j & 1:
                row |= masks[j]
        rows.extend([row] * s)
    return Graph._trusted(start, tuple(rows))


# -- pentagonal graphs -------------------------------------------------------

# L_r vertex order: X, Y1, Y2, Z1, Z2, Z3, ..., Zr.  The first five induce the
# pentagon X-Y1-Z2-Z1-Y2-X; every other pair is adjacent.
_PENTAGON_NONEDGES = {(0, 3), (0, 4), (1, 2), (1, 3), (2, 4)}


def pentagon_base(r: int) -> Graph:
    if r < 2:
        raise ValueError("r must be at least 2")
    k = r + 3
    return Graph.from_edges(k, [e for e in itertools.combinations(range(k), 2) if e not in _PENTAGON_NONEDGES])


@dataclass(frozen=True)
class PentagonalSpec:
    """Parameters of the blowup L_r[x, y, y, z_1, ..., z_r]."""

    r: int
    x: int
    y: int
    z: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "z", tuple(self.z))
        if self.r < 2:
            raise ValueError("r must be at least 2")
        if len(self.z) != self.r:
            raise ValueError(f"expected {self.r} z-parts, got {len(self.z)}")
        if self.x < 0 or self.y < 0 or any(v < 0 for v in self.z):
            raise ValueError("part sizes must be nonnegative")

    @property
    def n(self) -> int:
        return self.x + 2 * self.y + sum(self.z)

    @property
    def sizes(self) -> tuple[int, ...]:
        return (self.x, self.y, self.y) + self.z

    @property
    def is_pent_r_partite(self) -> bool:
        return self.x <= self.y <= min(self.z)

    def balanced_sums(self) -> tuple[int, ...]:
        """The r numbers x+y+z_1, x+y+z_2, z_3, ..., z_r."""
        return (self.x + self.y + self.z[0], self.x + self.y + self.z[1]) + self.z[2:]

    @property
    def is_pent_turan(self) -> bool:
        if not self.is_pent_r_partite:
            return False
        lo, hi = divmod(self.n + self.x, self.r)
        hi = lo + (1 if hi else 0)
        return all(s in (lo, hi) for s in self.balanced_sums())

    def edge_count(self) -> int:
        """e(L_r[x,y,y,z]) in closed form, without building the graph."""
        x, y, z = self.x, self.y, self.z
        z1, z2 = z[0], z[1]
        pent = 2 * x * y + y * z2 + y * z1 + z1 * z2
        block = x + 2 * y + z1 + z2
        rest = z[2:]
        tail = sum(rest)
        among = (tail * tail - sum(v * v for v in rest)) // 2
        return pent + block * tail + among

    def standard_partition(self) -> Partition:
        """(Y1 u Z1, X u Y2 u Z2, Z3, ..., Zr) on the vertex order of ptg_build."""
        # X->1, Y1->0, Y2->1, Z1->0, Z2->1, Zj->j-1
        owner = [1, 0, 1, 0, 1] + list(range(2, self.r))
        classes = []
        for part, size in enumerate(self.sizes):
            classes.extend([owner[part]] * size)
        return Partition(tuple(classes), self.r, self.x * self.y)

    def to_json(self) -> dict:
        return {"r": self.r, "x": self.x, "y": self.y, "z": list(self.z)}

    @classmethod
    def from_json(cls, data: dict) -> "PentagonalSpec":
        return cls(int(data["r"]), int(data["x"]), int(data["y"]), tuple(int(v) for v in data["z"]))

    def __str__(self):
        return f"L_{self.r}[{','.join(map(str, self.sizes))}]"


def turan_spec(r: int, n: int) -> PentagonalSpec:
    """T_r(n) written as the degenerate pentagonal spec x = y = 0."""
    return PentagonalSpec(r, 0, 0, tuple(turan_part_sizes(r, n)))


def ptg_build(spec: PentagonalSpec) -> Graph:
    return blowup(BlowupSpec(pentagon_base(spec.r), spec.sizes))


def _ceil_sqrt(m: int) -> int:
    if m <= 0:
        return 0
    return isqrt(m - 1) + 1


def sample_ptg(r: int, n: int, s: int) -> PentagonalSpec:
    """Pentagonal r-partite spec with many edges and D_r = s*t, where
    t = ceil(sqrt(s*n) / r^2).

    Requires 0 <= s <= n / r^4.  For s = 0 this is T_r(n).
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if s < 0 or s * r**4 > n:
        raise ValueError(f"need 0 <= s <= n/r^4, got s={s}, n={n}, r={r}")
    if s == 0:
        return turan_spec(r, n)
    r2 = r * r
    # t*r^2 >= sqrt(s*n)  <=>  t*r^2 >= ceil(sqrt(s*n)) since the left side is integral
    t = -(-_ceil_sqrt(s * n) // r2)
    targets = turan_part_sizes(r, n)  # already non-increasing
    z1 = targets[0] - t - (s + 1) // 2
    z2 = targets[1] - t - s // 2
    return PentagonalSpec(r, s, t, (z1, z2) + tuple(targets[2:]))

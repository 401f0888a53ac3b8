"""Maximum matching in general graphs (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque

from .graph import Graph, _bits


def _augment_from(root: int, adj: list[list[int]], match: list[int]) -> bool:
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    # flip the alternating path ending at the free vertex `to`
                    while to != -1:
                        pv = parent[to]
                        nxt = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def maximum_matching(g: Graph, limit: int | None = None) -> list[tuple[int, int]]:
    """A maximum matching as sorted pairs ``(u, v)`` with ``u < v``.

    With ``limit`` set, augmentation stops once the matching has that many
    edges.
    """
    n = g.n
    adj = [list(_bits(g.rows[v])) for v in range(n)]
    match = [-1] * n
    size = 0
    # greedy warm start
    for v in range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    size += 1
                    break
        if limit is not None and size >= limit:
            break
    for v in range(n):
        if limit is not None and size >= limit:
            break
        if match[v] == -1 and adj[v] and _augment_from(v, adj, match):
            size += 1
    return sorted((v, match[v]) for v in range(n) if match[v] > v)


def find_matching(g: Graph, k: int) -> list[tuple[int, int]] | None:
    """A matching of exactly ``k`` edges of ``g`` if one exists, else None."""
    if k < 1:
        raise ValueError("k must be at least 1")
    m = maximum_matching(g, limit=k)
    if len(m) < k:
        return None
    return m[:k]


def is_matching(g: Graph, edges) -> bool:
    seen = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True

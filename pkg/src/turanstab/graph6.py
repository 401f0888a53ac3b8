"""graph6 text serialization (McKay's format, undirected simple graphs)."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Error(f"graph too large for graph6: n={n}")


def encode_graph6(g: Graph) -> str:
    """Encode without header or trailing newline."""
    n = g.n
    out = [_encode_n(n)]
    chunk = 0
    width = 0
    # upper triangle, column-major: x(0,1) x(0,2) x(1,2) x(0,3) ...
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            chunk = chunk << 1 | (row >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(chunk + 63))
                chunk = width = 0
    if width:
        out.append(chr((chunk << (6 - width)) + 63))
    return "".join(out)


def decode_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 line")
    vals = []
    for pos, ch in enumerate(s):
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"byte {ch!r} at offset {pos} outside the graph6 range")
        vals.append(v)
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            if len(vals) < 8:
                raise Graph6Error("truncated 36-bit vertex count")
            n = 0
            for v in vals[2:8]:
                n = n << 6 | v
            body = vals[8:]
        else:
            if len(vals) < 4:
                raise Graph6Error("truncated 18-bit vertex count")
            n = 0
            for v in vals[1:4]:
                n = n << 6 | v
            body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    nbits = n * (n - 1) // 2
    expected = -(-nbits // 6)
    if len(body) != expected:
        raise Graph6Error(f"expected {expected} data bytes for n={n}, got {len(body)}")
    pad = expected * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._trusted(n, tuple(rows))


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a stream of lines, skipping blank lines and a leading header."""
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s:
            continue
        if lineno == 1 and s.startswith(HEADER):
            s = s[len(HEADER):]
            if not s:
                continue
        try:
            yield decode_graph6(s)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None


def write_graph6(graphs: Iterable[Graph], header: bool = False) -> str:
    parts = [HEADER] if header else []
    parts.extend(encode_graph6(g) for g in graphs)
    return "".join(p + "\n" for p in parts)

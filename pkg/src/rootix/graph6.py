"""graph6 encoding: one small undirected graph per ASCII line.

Short form only (n <= 62): a single length byte ``chr(63 + n)`` followed by
the upper-triangle adjacency bits in column-major order -- for each column j
the bits (0,j), (1,j), ..., (j-1,j) -- packed big-endian into 6-bit groups,
each stored as ``chr(63 + group)``, zero-padded to a multiple of six.
"""

from __future__ import annotations

from .graphs import Graph, GraphError


class Graph6Error(GraphError):
    """Record violates the graph6 format."""


def _pair_bits(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def write_graph6(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error(f"short-form graph6 caps at 62 vertices, got {g.n}")
    masks = g.adjacency_masks
    chars = [chr(63 + g.n)]
    group = 0
    filled = 0
    for i, j in _pair_bits(g.n):
        group = group << 1 | (masks[i] >> j & 1)
        filled += 1
        if filled == 6:
            chars.append(chr(63 + group))
            group = 0
            filled = 0
    if filled:
        chars.append(chr(63 + (group << (6 - filled))))
    return "".join(chars)


def parse_graph6(record: str | bytes) -> Graph:
    if isinstance(record, bytes):
        try:
            record = record.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error(f"graph6 record is not ASCII: {exc}") from None
    record = record.strip()
    if not record:
        raise Graph6Error("empty graph6 record")
    values = []
    for ch in record:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"invalid graph6 byte {ch!r}")
        values.append(v)
    n = values[0]
    if n == 63:
        raise Graph6Error("long-form graph6 (>= 63 vertices) is not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    body = values[1:]
    if len(body) < need:
        raise Graph6Error(f"truncated graph6 record: {need} data bytes expected, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing data in graph6 record: {len(body) - need} extra bytes")
    if n == 0:
        raise Graph6Error("graph6 record encodes zero vertices; graphs here need n >= 1")
    edges = []
    bit = 0
    for i, j in _pair_bits(n):
        if body[bit // 6] >> (5 - bit % 6) & 1:
            edges.append((i, j))
        bit += 1
    return Graph(n, tuple(sorted(edges)))

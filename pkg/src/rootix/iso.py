"""Canonical forms and isomorphism for small graphs (n <= 20).

The certificate is the graph6 record of a canonically relabelled copy.  The
canonical labelling maximizes, position by position, the pair

    (adjacency bits to the already-placed prefix, refinement colour)

over all placement orders.  Because each placed vertex appends a fixed-width
block of bits and earlier blocks dominate lexicographically, a depth-first
search that only branches over candidates tied on that pair finds the exact
maximum.  Refinement colours (iterated degree/neighbour-colour partition) and
a twin test (vertices interchangeable by a transposition automorphism) keep
the tie sets small; symmetric graphs still explore every tied branch, which
is fine at this scale.

The packed bit sequence produced by the search is exactly the graph6
column-major upper-triangle order, so equal certificates mean isomorphic
graphs and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph6 import write_graph6
from .graphs import Graph, GraphError, is_connected

MAX_VERTICES = 20


@dataclass(frozen=True)
class CanonicalForm:
    """Label-invariant certificate: equal iff the graphs are isomorphic."""

    certificate: bytes


def _refinement_colors(g: Graph) -> tuple[int, ...]:
    """Stable vertex colouring from iterated neighbour-colour signatures.

    Colours are dense ranks of invariant signatures, so they depend only on
    the isomorphism type, never on the labelling.
    """
    masks = g.adjacency_masks
    colors = list(g.degrees)
    classes = len(set(colors))
    for _ in range(g.n):
        sigs = []
        for v in range(g.n):
            nbr = []
            mask = masks[v]
            while mask:
                low = mask & -mask
                nbr.append(colors[low.bit_length() - 1])
                mask ^= low
            nbr.sort()
            sigs.append((colors[v], tuple(nbr)))
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(sigs)))}
        colors = [ranking[sig] for sig in sigs]
        if len(ranking) == classes:
            break
        classes = len(ranking)
    return tuple(colors)


def _drop_twins(cands: list[int], masks: tuple[int, ...], unplaced: int) -> list[int]:
    """Keep one of each pair swappable by an automorphism fixing placed vertices."""
    kept: list[int] = []
    closed = []
    open_ = []
    for v in cands:
        cl = (masks[v] | 1 << v) & unplaced
        op = masks[v] & unplaced
        if any(cl == closed[i] or op == open_[i] for i in range(len(kept))):
            continue
        kept.append(v)
        closed.append(cl)
        open_.append(op)
    return kept


def _canonical_order(g: Graph) -> tuple[int, ...]:
    n = g.n
    if n == 1:
        return (0,)
    masks = g.adjacency_masks
    colors = _refinement_colors(g)
    full = (1 << n) - 1
    best_code = -1
    best_order: tuple[int, ...] = ()

    def extend(order: list[int], placed: int, code: int, blocks: list[int]) -> None:
        nonlocal best_code, best_order
        depth = len(order)
        if depth == n:
            if code > best_code:
                best_code = code
                best_order = tuple(order)
            return
        top = (-1, -1)
        cands: list[int] = []
        for v in range(n):
            if placed >> v & 1:
                continue
            key = (blocks[v], colors[v])
            if key > top:
                top = key
                cands = [v]
            elif key == top:
                cands.append(v)
        for v in _drop_twins(cands, masks, full & ~placed):
            nxt = blocks[:]
            mv = masks[v]
            for u in range(n):
                nxt[u] = nxt[u] << 1 | (mv >> u & 1)
            order.append(v)
            extend(order, placed | 1 << v, (code << depth) | blocks[v], nxt)
            order.pop()

    extend([], 0, 0, [0] * n)
    return best_order


def canonical_graph(g: Graph) -> Graph:
    """Canonically relabelled copy; identical for isomorphic inputs."""
    if g.n > MAX_VERTICES:
        raise GraphError(f"canonical labelling caps at {MAX_VERTICES} vertices, got {g.n}")
    order = _canonical_order(g)
    position = {v: i for i, v in enumerate(order)}
    edges = sorted(
        (min(position[a], position[b]), max(position[a], position[b])) for a, b in g.edges
    )
    return Graph(g.n, tuple(edges))


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(write_graph6(canonical_graph(g)).encode("ascii"))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)


def edge_addition_neighborhood(g: Graph) -> list[Graph]:
    """One canonical representative per isomorphism class of ``g`` plus one edge.

    Sorted by certificate.  A complete graph has no non-edge and yields the
    empty list, which callers treat as "skip this graph".
    """
    if not is_connected(g):
        raise GraphError("edge-addition neighbourhood requires a connected graph")
    reps: dict[str, Graph] = {}
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.has_edge(i, j):
                continue
            grown = Graph(g.n, tuple(sorted(g.edges + ((i, j),))))
            canon = canonical_graph(grown)
            reps[write_graph6(canon)] = canon
    return [reps[key] for key in sorted(reps)]

"""Simple undirected graphs and their distance spectra.

A :class:`Graph` is an immutable vertex-count plus normalized edge tuple;
everything downstream (distance matrices, line graphs, the four distance
spectra that become polynomial coefficients) is a pure function of it.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping

import numpy as np

from . import backend

Edge = tuple[int, int]

#: Coefficient sources, in report order: pair counts, pair counts in the line
#: graph, degree-sum weights, degree-product weights.
KINDS = ("hosoya", "edge-hosoya", "schultz", "gutman")

UNREACHABLE = -1  # sentinel in distance matrices


class GraphError(ValueError):
    """Malformed graph input, or a graph outside an operation's domain."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` holds each edge once as ``(a, b)`` with ``a < b``, sorted
    lexicographically.  Instances are immutable and hashable; build them with
    :func:`from_edge_list`, which validates.
    """

    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @functools.cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbour bitmask (bit ``v`` set iff adjacent to ``v``)."""
        masks = [0] * self.n
        for a, b in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return tuple(masks)

    @functools.cached_property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for a, b in self.edges:
            degs[a] += 1
            degs[b] += 1
        return tuple(degs)

    @functools.cached_property
    def _csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.n + 1, np.int32)
        for a, b in self.edges:
            indptr[a + 1] += 1
            indptr[b + 1] += 1
        indptr = np.cumsum(indptr, dtype=np.int32)
        nbrs = np.empty(2 * self.m, np.int32)
        fill = indptr[:-1].copy()
        for a, b in self.edges:
            nbrs[fill[a]] = b
            fill[a] += 1
            nbrs[fill[b]] = a
            fill[b] += 1
        return indptr, nbrs

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adjacency_masks[a] >> b & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = []
        mask = self.adjacency_masks[v]
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return tuple(out)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and normalize an edge list into a :class:`Graph`.

    Rejects self-loops, endpoints outside ``0..n-1``, and duplicate edges in
    either orientation, naming the offending pair.
    """
    if n < 1:
        raise GraphError(f"vertex count must be at least 1, got {n}")
    seen: set[Edge] = set()
    for pair in edges:
        a, b = pair
        if a == b:
            raise GraphError(f"self-loop ({a}, {b}) is not allowed")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise GraphError(f"duplicate edge ({a}, {b})")
        seen.add(key)
    return Graph(n, tuple(sorted(seen)))


# ---------------------------------------------------------------------------
# deterministic small-graph constructors

def complete_graph(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star with ``n`` leaves on vertices ``0`` (hub) and ``1..n``."""
    return from_edge_list(n + 1, ((0, i) for i in range(1, n + 1)))


def wheel_graph(n: int) -> Graph:
    """Wheel with hub ``0`` and an ``n``-cycle rim ``1..n``."""
    if n < 3:
        raise GraphError(f"wheel needs a rim of at least 3 vertices, got {n}")
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    spokes = [(0, i) for i in range(1, n + 1)]
    return from_edge_list(n + 1, rim + spokes)


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then one "a b" line per edge

def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"expected header 'n m', got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise GraphError(f"header promises {m} edges but {len(lines) - 1} lines follow")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"expected an 'a b' edge line, got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"expected an 'a b' edge line, got {ln!r}") from None
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# distances and connectivity

def all_pairs_distances(g: Graph) -> np.ndarray:
    """BFS hop counts as an (n, n) int16 matrix; ``UNREACHABLE`` off-component."""
    indptr, nbrs = g._csr
    return backend.kernels().all_pairs_dist(indptr, nbrs, g.n)


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    masks = g.adjacency_masks
    seen = 1
    queue = deque([0])
    while queue:
        rest = masks[queue.popleft()] & ~seen
        seen |= rest
        while rest:
            low = rest & -rest
            queue.append(low.bit_length() - 1)
            rest ^= low
    return seen == (1 << g.n) - 1


def line_graph(g: Graph) -> Graph:
    """Graph on the edges of ``g``; two edges adjacent iff they share an endpoint.

    Vertex ``i`` of the result is ``g.edges[i]`` (the lexicographic edge order),
    so the labelling is deterministic.
    """
    if g.m < 1:
        raise GraphError("line graph is undefined for an edgeless graph")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (a, b) in enumerate(g.edges):
        incident[a].append(i)
        incident[b].append(i)
    meet: set[Edge] = set()
    for bundle in incident:
        meet.update(combinations(bundle, 2))
    return Graph(g.m, tuple(sorted(meet)))


# ---------------------------------------------------------------------------
# distance spectra

@dataclass(frozen=True)
class DistanceSpectrum:
    """Per-distance weights: the coefficient source for one polynomial kind.

    ``weights[k]`` is, per ``kind``: the number of vertex pairs at distance k
    (hosoya), the number of edge pairs at line-graph distance k (edge-hosoya),
    or that pair count weighted by degree sums / degree products (schultz /
    gutman).  Only nonzero weights are stored; all weights are exact ints.
    """

    kind: str
    weights: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, "weights", MappingProxyType(dict(self.weights)))

    @property
    def diameter(self) -> int:
        return max(self.weights, default=0)


def spectrum(g: Graph, kind: str) -> DistanceSpectrum:
    """Distance spectrum of a connected graph.

    The edge-hosoya spectrum is the hosoya spectrum of the line graph and
    needs at least two edges (one edge would leave nothing to pair).
    """
    if kind not in KINDS:
        raise GraphError(f"unknown spectrum kind {kind!r}; choose from {KINDS}")
    if not is_connected(g):
        raise GraphError("spectrum requires a connected graph")
    if kind == "edge-hosoya":
        if g.m < 2:
            raise GraphError(f"edge-hosoya needs at least 2 edges, got m={g.m}")
        inner = spectrum(line_graph(g), "hosoya")
        return DistanceSpectrum(kind, inner.weights)
    dist = all_pairs_distances(g)
    degs = np.asarray(g.degrees, np.int64)
    counts = backend.kernels().distance_weight_counts(dist, degs)
    row = {"hosoya": 0, "schultz": 1, "gutman": 2}[kind]
    weights = {k: int(w) for k, w in enumerate(counts[row]) if k > 0 and w > 0}
    return DistanceSpectrum(kind, weights)

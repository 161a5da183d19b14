"""Exhaustive, isomorphism-free enumeration of free trees (n <= 16) and
connected graphs (n <= 8), plus graph6-file ingestion.

Free trees: canonical rooted-tree level sequences are generated with the
classic successor rule (lexicographically decreasing order, each rooted
isomorphism class exactly once).  A free tree with a single centroid
corresponds to exactly one rooted tree whose root subtrees all have at most
floor((n-1)/2) vertices -- the rooting at that centroid -- so filtering the
rooted stream on that bound is isomorphism-free.  Bicentroidal trees (even n
only) are exactly the unordered pairs of rooted trees on n/2 vertices joined
root to root, generated separately.

Connected graphs: level n is built from level n-1 by attaching one new vertex
to every nonempty subset of old vertices, deduplicating through canonical
certificates.  Every connected graph has a non-cut vertex, so every class is
reached.  Levels are cached as sorted certificate tuples; the yield order is
certificate order, hence deterministic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .graph6 import parse_graph6, write_graph6, Graph6Error
from .graphs import Graph, GraphError
from .iso import canonical_graph

TREE_CAP = 16
CONNECTED_CAP = 8


@dataclass(frozen=True)
class FamilySpec:
    """Which family to stream: ``trees``/``connected`` on ``n`` vertices, or
    every record of a ``graph6`` file."""

    kind: str
    n: int | None = None
    source: str | Path | None = None

    def __post_init__(self):
        if self.kind not in ("trees", "connected", "graph6"):
            raise GraphError(f"unknown family kind {self.kind!r}")
        if self.kind == "graph6":
            if self.source is None:
                raise GraphError("graph6 family needs a source file")
            return
        if self.n is None:
            raise GraphError(f"{self.kind} family needs a vertex count")
        cap = TREE_CAP if self.kind == "trees" else CONNECTED_CAP
        if not 1 <= self.n <= cap:
            raise GraphError(f"{self.kind} enumeration supports 1 <= n <= {cap}, got {self.n}")

    def label(self) -> str:
        if self.kind == "trees":
            return f"T_{self.n}"
        if self.kind == "connected":
            return f"N_{self.n}"
        return Path(self.source).stem


def enumerate_family(spec: FamilySpec) -> Iterator[Graph]:
    """One connected representative per isomorphism class, deterministic order."""
    if spec.kind == "trees":
        yield from free_trees(spec.n)
    elif spec.kind == "connected":
        yield from connected_graphs(spec.n)
    else:
        yield from _graph6_file(Path(spec.source))


def family_size(spec: FamilySpec) -> int:
    return sum(1 for _ in enumerate_family(spec))


# ---------------------------------------------------------------------------
# rooted trees as level sequences

def rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences of all rooted trees on ``n`` vertices.

    The sequence lists vertex depths in preorder, root depth 0, subtrees in
    lexicographically non-increasing order.  The successor rule trims the
    rightmost deep vertex and tiles the tail with the block that precedes it.
    """
    if n < 1:
        return
    seq = list(range(n))
    while True:
        yield seq[:]
        p = n - 1
        while p > 0 and seq[p] < 2:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        for i in range(p, n):
            seq[i] = seq[i - (p - q)]


def _tree_from_levels(levels: list[int], base: int = 0) -> list[tuple[int, int]]:
    """Preorder level sequence -> parent edges, vertex ids offset by ``base``."""
    latest = [0]
    edges = []
    for v in range(1, len(levels)):
        depth = levels[v]
        parent = latest[depth - 1]
        edges.append((base + parent, base + v))
        del latest[depth:]
        latest.append(v)
    return edges


def _free_tree_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ()),)
    out = []
    heaviest_allowed = (n - 1) // 2
    for seq in rooted_level_sequences(n):
        starts = [i for i in range(1, n) if seq[i] == 1]
        starts.append(n)
        sizes = [b - a for a, b in zip(starts, starts[1:])]
        if max(sizes) <= heaviest_allowed:
            out.append(Graph(n, tuple(sorted(_tree_from_levels(seq)))))
    if n % 2 == 0:
        half = n // 2
        halves = list(rooted_level_sequences(half))
        for i, left in enumerate(halves):
            for right in halves[i:]:
                edges = _tree_from_levels(left) + _tree_from_levels(right, base=half)
                edges.append((0, half))
                out.append(Graph(n, tuple(sorted(edges))))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _free_trees_cached(n: int) -> tuple[Graph, ...]:
    return _free_tree_graphs(n)


def free_trees(n: int) -> Iterator[Graph]:
    """All free trees on ``n`` vertices (n <= 16), one per isomorphism class."""
    if not 1 <= n <= TREE_CAP:
        raise GraphError(f"tree enumeration supports 1 <= n <= {TREE_CAP}, got {n}")
    yield from _free_trees_cached(n)


# ---------------------------------------------------------------------------
# connected graphs

@functools.lru_cache(maxsize=None)
def _connected_certs(n: int) -> tuple[str, ...]:
    if n == 1:
        return (write_graph6(Graph(1, ())),)
    seen: set[str] = set()
    new = n - 1
    for cert in _connected_certs(n - 1):
        parent = parse_graph6(cert)
        for subset in range(1, 1 << new):
            extra = tuple((v, new) for v in range(new) if subset >> v & 1)
            child = Graph(n, tuple(sorted(parent.edges + extra)))
            seen.add(write_graph6(canonical_graph(child)))
    return tuple(sorted(seen))


def connected_graphs(n: int) -> Iterator[Graph]:
    """All connected graphs on ``n`` vertices (n <= 8), one per class."""
    if not 1 <= n <= CONNECTED_CAP:
        raise GraphError(f"connected-graph enumeration supports 1 <= n <= {CONNECTED_CAP}, got {n}")
    for cert in _connected_certs(n):
        yield parse_graph6(cert)


def _graph6_file(path: Path) -> Iterator[Graph]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphError(f"cannot read graph6 file: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"record {lineno} of {path}: {exc}") from None

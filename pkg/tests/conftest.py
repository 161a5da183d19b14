import bisect
import itertools
from pathlib import Path

import numpy as np
import pytest

from rootix import backend
from rootix.graphs import Graph, from_edge_list, parse_edge_list

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def phenanthrene() -> Graph:
    return parse_edge_list((DATA / "phenanthrene.edges").read_text())


@pytest.fixture(params=backend.available_backends())
def each_backend(request):
    """Run the decorated test once per kernel backend, restoring the default."""
    previous = backend.active_backend()
    backend.set_backend(request.param)
    yield request.param
    backend.set_backend(previous)


def relabel(g: Graph, perm) -> Graph:
    return from_edge_list(g.n, [(perm[a], perm[b]) for a, b in g.edges])


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """All-permutations oracle, practical for n <= 7."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    target = set(h.edges)
    for perm in itertools.permutations(range(g.n)):
        if all(
            (min(perm[a], perm[b]), max(perm[a], perm[b])) in target for a, b in g.edges
        ):
            return True
    return False


def floyd_warshall(g: Graph) -> np.ndarray:
    """Independent distance oracle; -1 for unreachable, like the BFS kernel."""
    big = 1 << 20
    dist = np.full((g.n, g.n), big, np.int64)
    np.fill_diagonal(dist, 0)
    for a, b in g.edges:
        dist[a, b] = dist[b, a] = 1
    for k in range(g.n):
        dist = np.minimum(dist, dist[:, k, None] + dist[None, k, :])
    dist[dist >= big] = -1
    return dist


def random_prufer_tree(rng, n: int) -> Graph:
    """Uniform random labelled tree from a Prufer sequence."""
    if n == 1:
        return Graph(1, ())
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    for v in seq:
        leaf = leaves.pop(0)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            bisect.insort(leaves, v)
    edges.append((min(leaves[0], leaves[1]), max(leaves[0], leaves[1])))
    return from_edge_list(n, edges)

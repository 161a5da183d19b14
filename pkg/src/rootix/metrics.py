"""Family-level evaluation machinery: the eight indices, discrimination
counts, Pearson correlation, and edge-addition structure sensitivity.

Index values are computed in two passes so the batched root kernel sees one
big coefficient matrix per family: a per-graph pass (parallelisable across
workers without changing any result) collects exact integer spectra, then a
single vectorised pass solves all the roots.
"""

from __future__ import annotations

import math
import multiprocessing
import os
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .graphs import Graph, GraphError
from .iso import edge_addition_neighborhood
from .polynomials import Polynomial, build, classic_index
from .roots import root_indices

# Collision rule for real-valued indices: exact equality of the computed
# doubles.  Equal polynomials give bit-identical roots (the solver is
# deterministic), while any positive tolerance down to 1e-10 already merges
# genuinely distinct root-indices on trees with 10+ vertices -- their values
# pack that tightly.  A positive eps_eq stays available for experiments.
DEFAULT_EPS_EQ = 0.0

#: Report identifiers: a root-index per polynomial kind, then the classic
#: derivative-at-one indices.
INDEX_IDS = ("delta-H", "delta-He", "delta-Sc", "delta-Gut", "W", "We", "Sc", "Gut")

_KIND_OF = {
    "delta-H": "hosoya",
    "delta-He": "edge-hosoya",
    "delta-Sc": "schultz",
    "delta-Gut": "gutman",
    "W": "hosoya",
    "We": "edge-hosoya",
    "Sc": "schultz",
    "Gut": "gutman",
}


@dataclass(frozen=True)
class IndexSpec:
    id: str
    value_kind: str  # "real" for root-indices, "integer" for classic indices


INDEX_SPECS = {
    name: IndexSpec(name, "real" if name.startswith("delta-") else "integer")
    for name in INDEX_IDS
}


def index_spec(name: str) -> IndexSpec:
    try:
        return INDEX_SPECS[name]
    except KeyError:
        raise GraphError(f"unknown index {name!r}; choose from {INDEX_IDS}") from None


@dataclass(frozen=True)
class FamilyResult:
    """Per-graph value vectors for one family, in enumeration order."""

    label: str
    size: int
    values: dict[str, tuple]


def _graph_polynomials(g: Graph) -> dict[str, Polynomial]:
    return {kind: build(g, kind) for kind in ("hosoya", "edge-hosoya", "schultz", "gutman")}


def graph_indices(g: Graph, ids: Sequence[str] = INDEX_IDS) -> dict[str, int | float]:
    """All requested index values for a single graph."""
    for name in ids:
        index_spec(name)
    kinds = {_KIND_OF[name] for name in ids}
    polys = {kind: build(g, kind) for kind in kinds}
    out: dict[str, int | float] = {}
    root_ids = [name for name in ids if name.startswith("delta-")]
    if root_ids:
        solved = root_indices([polys[_KIND_OF[name]] for name in root_ids])
        for name, res in zip(root_ids, solved):
            out[name] = res.delta
    for name in ids:
        if not name.startswith("delta-"):
            out[name] = classic_index(polys[_KIND_OF[name]])
    return {name: out[name] for name in ids}


# ---------------------------------------------------------------------------
# two-pass family evaluation (worker pool friendly)

def _spectra_task(g: Graph) -> dict[str, tuple[int, ...]]:
    return {kind: poly.coefficients for kind, poly in _graph_polynomials(g).items()}


def _progress(stream, label: str, done: int, total: int | None) -> None:
    stream.write(f"{label}: {done}/{total}\n" if total else f"{label}: {done}\n")
    stream.flush()


def _map_graphs(
    fn: Callable,
    graphs: Sequence,
    workers: int,
    label: str = "",
    progress_stream=None,
) -> list:
    """Order-preserving map; worker count is a speed knob, never a results knob."""
    def _ticker():
        last = time.monotonic()
        emitted = False

        def tick(done: int, total: int) -> None:
            nonlocal last, emitted
            if done < total and time.monotonic() - last <= 2.0:
                return
            if done == total and not emitted:
                return  # short run, stay quiet
            _progress(progress_stream, label, done, total)
            last = time.monotonic()
            emitted = True

        return tick

    tick = _ticker() if progress_stream else lambda done, total: None
    if workers <= 1 or len(graphs) < 64:
        out = []
        for i, g in enumerate(graphs, 1):
            out.append(fn(g))
            tick(i, len(graphs))
        return out
    ctx = multiprocessing.get_context("fork")
    chunk = max(16, len(graphs) // (workers * 8))
    out = []
    with ctx.Pool(workers) as pool:
        for i, res in enumerate(pool.imap(fn, graphs, chunksize=chunk), 1):
            out.append(res)
            tick(i, len(graphs))
    return out


def default_workers() -> int:
    raw = os.environ.get("ROOTIX_WORKERS", "").strip()
    if not raw:
        return 1
    count = int(raw)
    if count < 1:
        raise GraphError(f"ROOTIX_WORKERS must be >= 1, got {count}")
    return count


def family_values(
    graphs: Iterable[Graph],
    ids: Sequence[str] = INDEX_IDS,
    label: str = "",
    workers: int = 1,
    progress_stream=None,
) -> FamilyResult:
    """Evaluate the requested indices over a whole family."""
    for name in ids:
        index_spec(name)
    graphs = list(graphs)
    spectra = _map_graphs(_spectra_task, graphs, workers, f"{label} spectra", progress_stream)
    values: dict[str, tuple] = {}
    for name in ids:
        kind = _KIND_OF[name]
        polys = [Polynomial(row[kind]) for row in spectra]
        if name.startswith("delta-"):
            values[name] = tuple(res.delta for res in root_indices(polys))
        else:
            values[name] = tuple(classic_index(p) for p in polys)
    return FamilyResult(label, len(graphs), values)


# ---------------------------------------------------------------------------
# discrimination

def discrimination(
    values: Sequence, value_kind: str, eps_eq: float = DEFAULT_EPS_EQ
) -> tuple[int, float]:
    """(ND, Dis): how many entries collide, and the surviving fraction.

    Integer indices collide on exact equality.  Real-valued indices are
    sorted and chained into clusters wherever neighbouring values differ by
    at most ``eps_eq``; every member of a cluster of two or more counts as
    colliding.
    """
    if len(values) == 0:
        raise GraphError("discrimination needs a nonempty value vector")
    if value_kind == "integer":
        counts: dict = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        nd = sum(c for c in counts.values() if c >= 2)
    elif value_kind == "real":
        if eps_eq < 0:
            raise GraphError(f"eps_eq must be nonnegative, got {eps_eq}")
        ordered = np.sort(np.asarray(values, np.float64))
        close = np.diff(ordered) <= eps_eq
        nd = 0
        run = 1
        for linked in close:
            if linked:
                run += 1
            else:
                nd += run if run >= 2 else 0
                run = 1
        nd += run if run >= 2 else 0
    else:
        raise GraphError(f"unknown value kind {value_kind!r}")
    return nd, (len(values) - nd) / len(values)


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Sample Pearson correlation; rejects degenerate input."""
    x = np.asarray(xs, np.float64)
    y = np.asarray(ys, np.float64)
    if x.shape != y.shape:
        raise GraphError(f"length mismatch: {x.shape} vs {y.shape}")
    if len(x) < 2:
        raise GraphError("pearson needs at least two samples")
    dx = x - x.mean()
    dy = y - y.mean()
    sx = math.sqrt(float(dx @ dx))
    sy = math.sqrt(float(dy @ dy))
    if sx == 0.0 or sy == 0.0:
        raise GraphError("pearson is undefined for a zero-variance vector")
    return float(dx @ dy) / (sx * sy)


def correlation_matrix(result: FamilyResult, ids: Sequence[str]) -> np.ndarray:
    mat = np.eye(len(ids))
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            r = pearson(result.values[ids[i]], result.values[ids[j]])
            mat[i, j] = mat[j, i] = r
    return mat


# ---------------------------------------------------------------------------
# structure sensitivity / abruptness over edge-addition neighbourhoods

@dataclass(frozen=True)
class SensitivityRow:
    """Mean relative change, worst relative change, their quotient, and the
    same three for absolute changes (RMS mean, max, quotient)."""

    ss1: float
    abr1: float
    sa1: float
    ss2: float
    abr2: float
    sa2: float


def _per_graph_sensitivity(base: float, others: Sequence[float]) -> tuple[float, float, float, float]:
    rel = [abs((base - o) / base) for o in others]
    diff = [abs(base - o) for o in others]
    ss1 = sum(rel) / len(rel)
    abr1 = max(rel)
    ss2 = math.sqrt(sum(d * d for d in diff) / len(diff))
    abr2 = max(diff)
    return ss1, abr1, ss2, abr2


def graph_sensitivity(g: Graph, name: str) -> SensitivityRow:
    """Sensitivity of one index for one graph over its edge-addition classes."""
    index_spec(name)
    nbhd = edge_addition_neighborhood(g)
    if not nbhd:
        raise GraphError("graph is complete: no edge can be added")
    base = graph_indices(g, [name])[name]
    others = [graph_indices(h, [name])[name] for h in nbhd]
    ss1, abr1, ss2, abr2 = _per_graph_sensitivity(base, others)
    return SensitivityRow(ss1, abr1, ss1 / abr1, ss2, abr2, ss2 / abr2)


def _neighborhood_task(g: Graph) -> list[Graph]:
    return edge_addition_neighborhood(g)


def family_sensitivity(
    graphs: Iterable[Graph],
    ids: Sequence[str],
    label: str = "",
    workers: int = 1,
    progress_stream=None,
) -> dict[str, SensitivityRow]:
    """Family-averaged sensitivity: means of the per-graph numbers, with the
    quotient taken on the means (not averaged per graph).

    Complete graphs have no edge-addition neighbourhood and are skipped; a
    note goes to the progress stream.  Index values of the derived graphs are
    cached by identity, since the same one-edge-larger graph arises from many
    parents.
    """
    for name in ids:
        index_spec(name)
    graphs = list(graphs)
    neighborhoods = _map_graphs(
        _neighborhood_task, graphs, workers, f"{label} neighbourhoods", progress_stream
    )
    skipped = sum(1 for nb in neighborhoods if not nb)
    if skipped == len(graphs):
        raise GraphError("every graph in the family is complete; nothing to measure")
    if skipped and progress_stream:
        progress_stream.write(f"{label}: skipped {skipped} complete graph(s)\n")

    unique: dict[Graph, int] = {}
    order: list[Graph] = []
    for g in graphs:
        if g not in unique:
            unique[g] = len(order)
            order.append(g)
    for nb in neighborhoods:
        for h in nb:
            if h not in unique:
                unique[h] = len(order)
                order.append(h)
    table = family_values(order, ids, label, workers, progress_stream)

    out = {}
    for name in ids:
        vals = table.values[name]
        ss1s, abr1s, ss2s, abr2s = [], [], [], []
        for g, nbhd in zip(graphs, neighborhoods):
            if not nbhd:
                continue
            base = vals[unique[g]]
            others = [vals[unique[h]] for h in nbhd]
            ss1, abr1, ss2, abr2 = _per_graph_sensitivity(base, others)
            ss1s.append(ss1)
            abr1s.append(abr1)
            ss2s.append(ss2)
            abr2s.append(abr2)
        count = len(ss1s)
        ss1 = sum(ss1s) / count
        abr1 = sum(abr1s) / count
        ss2 = sum(ss2s) / count
        abr2 = sum(abr2s) / count
        out[name] = SensitivityRow(ss1, abr1, ss1 / abr1, ss2, abr2, ss2 / abr2)
    return out

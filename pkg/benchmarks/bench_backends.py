#!/usr/bin/env python3
"""Time the numba kernels against the pure-numpy fallbacks on realistic
workloads and check that both produce identical results.

Usage:
    python benchmarks/bench_backends.py [--repeat 3] [--trees 12]

The same kernels can be forced package-wide with ROOTIX_BACKEND=numpy|numba.
"""

from __future__ import annotations

import argparse
import time

from rootix import backend
from rootix.families import connected_graphs, free_trees
from rootix.graphs import all_pairs_distances, line_graph, spectrum
from rootix.polynomials import build
from rootix.roots import root_indices


def _workloads(tree_order: int):
    trees = list(free_trees(tree_order))
    conn = list(connected_graphs(7))
    polys = [build(g, kind) for g in trees for kind in ("hosoya", "schultz", "gutman")]
    polys += [build(g, "edge-hosoya") for g in conn]

    def distances():
        return [all_pairs_distances(g).sum() for g in trees + conn]

    def spectra():
        return [
            tuple(sorted(spectrum(g, kind).weights.items()))
            for g in trees
            for kind in ("hosoya", "schultz", "gutman")
        ]

    def line_graph_distances():
        return [all_pairs_distances(line_graph(g)).sum() for g in conn]

    def roots():
        return [r.delta for r in root_indices(polys)]

    return {
        f"all-pairs distances ({len(trees) + len(conn)} graphs)": distances,
        f"three spectra over T_{tree_order}": spectra,
        f"line-graph distances over N_7": line_graph_distances,
        f"bisection+newton roots ({len(polys)} polynomials)": roots,
    }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timed repetitions per backend")
    parser.add_argument("--trees", type=int, default=12, help="tree family order for the workloads")
    args = parser.parse_args()

    names = backend.available_backends()
    if "numba" in names:
        backend.set_backend("numba")
        _ = list(root_indices([build(g, "hosoya") for g in free_trees(5)]))  # trigger JIT

    workloads = _workloads(args.trees)
    print(f"backends: {', '.join(names)}   repeats: {args.repeat}\n")
    width = max(len(k) for k in workloads)
    mismatches = 0
    for label, fn in workloads.items():
        timings: dict[str, float] = {}
        results: dict[str, object] = {}
        for name in names:
            backend.set_backend(name)
            results[name] = fn()  # warm caches and capture the output
            timings[name] = min(_timed(fn)[0] for _ in range(args.repeat))
        line = f"{label.ljust(width)}"
        for name in names:
            line += f"   {name}: {timings[name] * 1000:9.1f} ms"
        if len(names) == 2:
            a, b = (timings[n] for n in names)
            line += f"   speedup x{max(a, b) / min(a, b):.1f}"
            if results[names[0]] != results[names[1]]:
                line += "   RESULTS DIFFER"
                mismatches += 1
        print(line)
    backend.set_backend(names[-1] if "numba" not in names else "numba")
    if mismatches:
        print(f"\n{mismatches} workload(s) disagreed between backends")
        return 1
    print("\nall workloads produced identical results on every backend")
    return 0


def _timed(fn):
    start = time.perf_counter()
    result = fn()
    return (time.perf_counter() - start, result)


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end.

Subcommands: ``compute`` (single-graph report), ``discriminate``,
``correlate``, ``sensitivity`` (family tables), ``enumerate`` (counts or a
graph6 dump), ``selftest``.  Data goes to stdout or ``--out``; progress for
long runs goes to stderr.  Exit codes: 0 success, 1 input error, 2 internal
invariant violation, 3 selftest failure.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import metrics, report
from .families import FamilySpec, enumerate_family
from .graph6 import parse_graph6, write_graph6
from .graphs import (
    Graph,
    GraphError,
    KINDS,
    from_edge_list,
    is_connected,
    parse_edge_list,
)
from .iso import canonical_form
from .polynomials import (
    GraphFamily,
    build,
    classic_index,
    closed_form,
    family_graph,
    max_coefficient,
)
from .roots import complete_graph_root, root_index

_ROOT_ID_OF_KIND = {
    "hosoya": "delta-H",
    "edge-hosoya": "delta-He",
    "schultz": "delta-Sc",
    "gutman": "delta-Gut",
}
_CLASSIC_ID_OF_KIND = {"hosoya": "W", "edge-hosoya": "We", "schultz": "Sc", "gutman": "Gut"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; input errors are 1
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_family_options(sub):
    sub.add_argument("--family", choices=("trees", "conn"), help="enumerated family")
    sub.add_argument("--n", type=int, help="vertex count of the family")
    sub.add_argument("--input", help="edge-list or graph6 file instead of a family")


def _add_report_options(sub, indices=True):
    if indices:
        sub.add_argument(
            "--index",
            action="append",
            choices=metrics.INDEX_IDS,
            help="index id (repeatable; default: all eight)",
        )
    sub.add_argument("--format", choices=report.FORMATS, default="pretty")
    sub.add_argument("--out", help="write the report here instead of stdout")
    sub.add_argument("--workers", type=int, default=None, help="worker processes (default: ROOTIX_WORKERS or 1)")
    sub.add_argument("--eps-eq", type=float, default=metrics.DEFAULT_EPS_EQ,
                     help="equality tolerance for real-valued index collisions")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rootix", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("compute", help="polynomials, classic indices and root-indices of one graph")
    sub.add_argument("--input", required=True, help="edge-list file or single-line graph6 file")
    _add_report_options(sub, indices=False)

    sub = subs.add_parser("discriminate", help="collision counts (ND, Dis) over a family")
    _add_family_options(sub)
    _add_report_options(sub)

    sub = subs.add_parser("correlate", help="Pearson correlation matrix over a family")
    _add_family_options(sub)
    _add_report_options(sub)

    sub = subs.add_parser("sensitivity", help="edge-addition sensitivity/abruptness over a family")
    _add_family_options(sub)
    _add_report_options(sub)

    sub = subs.add_parser("enumerate", help="stream a family as graph6, or just count it")
    _add_family_options(sub)
    sub.add_argument("--count", action="store_true", help="print only the number of graphs")
    sub.add_argument("--out", help="write records here instead of stdout")

    sub = subs.add_parser("selftest", help="closed-form, root, bound and enumeration self checks")
    sub.add_argument("--seed", type=int, default=0, help="seed for the randomised relabelling checks")
    return parser


def _family_spec(args) -> FamilySpec:
    if args.input:
        if args.family or args.n:
            raise GraphError("--input and --family/--n are mutually exclusive")
        return FamilySpec("graph6", source=args.input)
    if not args.family or args.n is None:
        raise GraphError("need --family and --n (or --input)")
    kind = "trees" if args.family == "trees" else "connected"
    return FamilySpec(kind, n=args.n)


def _load_single_graph(path: str) -> Graph:
    text = Path(path).read_text()
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphError(f"{path} is empty")
    head = lines[0].split()
    if len(head) == 2 and all(tok.lstrip("-").isdigit() for tok in head):
        return parse_edge_list(text)
    if len(lines) != 1:
        raise GraphError(f"{path} holds {len(lines)} graph6 records; compute expects exactly one graph")
    return parse_graph6(lines[0])


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _workers(args) -> int:
    w = args.workers if args.workers is not None else metrics.default_workers()
    if w < 1:
        raise GraphError(f"--workers must be >= 1, got {w}")
    return w


def _indices(args) -> list[str]:
    return list(args.index) if args.index else list(metrics.INDEX_IDS)


# ---------------------------------------------------------------------------
# subcommands

def cmd_compute(args) -> int:
    g = _load_single_graph(args.input)
    if not is_connected(g):
        raise GraphError("compute needs a connected graph")
    payload = {"n": g.n, "m": g.m, "polynomials": {}, "classic": {}, "roots": {}}
    pretty_rows = []
    for kind in KINDS:
        try:
            poly = build(g, kind)
        except GraphError as exc:
            payload["polynomials"][kind] = None
            pretty_rows.append((kind, f"undefined ({exc})"))
            continue
        res = root_index(poly)
        payload["polynomials"][kind] = {
            "coefficients": list(poly.coefficients),
            "text": poly.pretty(),
        }
        payload["classic"][_CLASSIC_ID_OF_KIND[kind]] = classic_index(poly)
        payload["roots"][_ROOT_ID_OF_KIND[kind]] = {
            "delta": res.delta,
            "bracket_width": res.bracket_width,
            "lower_bound": res.lower_bound,
            "is_exactly_one": res.is_exactly_one,
            "max_coefficient": max_coefficient(poly),
        }
        note = " (exact)" if res.is_exactly_one else ""
        pretty_rows.append((kind, poly.pretty()))
        pretty_rows.append(
            (
                _ROOT_ID_OF_KIND[kind],
                f"{res.delta:.5f}{note}   bound > {res.lower_bound:.5f}   bracket {res.bracket_width:.2e}",
            )
        )
        pretty_rows.append((_CLASSIC_ID_OF_KIND[kind], str(classic_index(poly))))
    if args.format == "json":
        _emit(report.rows_to_json(payload), args.out)
    elif args.format == "csv":
        rows = [{"item": k, "value": v} for k, v in pretty_rows]
        _emit(report.rows_to_csv(["item", "value"], rows), args.out)
    else:
        width = max(len(k) for k, _ in pretty_rows)
        text = f"graph: n={g.n} m={g.m}\n" + "".join(
            f"{k.ljust(width)}  {v}\n" for k, v in pretty_rows
        )
        _emit(text, args.out)
    return 0


def _family_result(args, ids):
    spec = _family_spec(args)
    graphs = list(enumerate_family(spec))
    return spec.label(), metrics.family_values(
        graphs, ids, spec.label(), _workers(args), progress_stream=sys.stderr
    )


def cmd_discriminate(args) -> int:
    ids = _indices(args)
    label, fam = _family_result(args, ids)
    rows = []
    for name in ids:
        nd, dis = metrics.discrimination(
            fam.values[name], metrics.index_spec(name).value_kind, args.eps_eq
        )
        rows.append({"family": label, "index": name, "N": fam.size, "ND": nd, "Dis": dis})
    columns = ["family", "index", "N", "ND", "Dis"]
    if args.format == "json":
        _emit(report.rows_to_json(rows), args.out)
    elif args.format == "csv":
        _emit(report.rows_to_csv(columns, rows), args.out)
    else:
        _emit(report.rows_to_pretty(columns, rows), args.out)
    return 0


def cmd_correlate(args) -> int:
    ids = _indices(args)
    label, fam = _family_result(args, ids)
    mat = metrics.correlation_matrix(fam, ids)
    if args.format == "json":
        payload = {"family": label, "N": fam.size, "indices": ids,
                   "matrix": [list(map(float, row)) for row in mat]}
        _emit(report.rows_to_json(payload), args.out)
        return 0
    rows = []
    for i, name in enumerate(ids):
        row = {"family": label, "index": name}
        row.update({other: float(mat[i, j]) for j, other in enumerate(ids)})
        rows.append(row)
    columns = ["family", "index", *ids]
    if args.format == "csv":
        _emit(report.rows_to_csv(columns, rows), args.out)
    else:
        _emit(report.rows_to_pretty(columns, rows), args.out)
    return 0


def cmd_sensitivity(args) -> int:
    ids = _indices(args)
    if args.input:
        g = _load_single_graph(args.input)
        label = Path(args.input).stem
        table = {name: metrics.graph_sensitivity(g, name) for name in ids}
        size = 1
    else:
        spec = _family_spec(args)
        graphs = list(enumerate_family(spec))
        label = spec.label()
        size = len(graphs)
        table = metrics.family_sensitivity(
            graphs, ids, label, _workers(args), progress_stream=sys.stderr
        )
    rows = [
        {
            "family": label,
            "index": name,
            "N": size,
            "SS1": row.ss1,
            "Abr1": row.abr1,
            "SA1": row.sa1,
            "SS2": row.ss2,
            "Abr2": row.abr2,
            "SA2": row.sa2,
        }
        for name, row in table.items()
    ]
    columns = ["family", "index", "N", "SS1", "Abr1", "SA1", "SS2", "Abr2", "SA2"]
    if args.format == "json":
        _emit(report.rows_to_json(rows), args.out)
    elif args.format == "csv":
        _emit(report.rows_to_csv(columns, rows), args.out)
    else:
        _emit(report.rows_to_pretty(columns, rows), args.out)
    return 0


def cmd_enumerate(args) -> int:
    spec = _family_spec(args)
    if args.count:
        _emit(f"{sum(1 for _ in enumerate_family(spec))}\n", args.out)
        return 0
    lines = [write_graph6(g) for g in enumerate_family(spec)]
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


# ---------------------------------------------------------------------------
# selftest

TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301)
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112)


def _selftest_closed_forms(fail) -> None:
    ranges = {
        "complete": {"hosoya": (2, 8), "schultz": (2, 8), "gutman": (2, 8), "edge-hosoya": (3, 8)},
        "cycle": {k: (3, 12) for k in KINDS},
        "star": {"hosoya": (1, 10), "schultz": (1, 10), "gutman": (1, 10), "edge-hosoya": (2, 10)},
        "wheel": {"hosoya": (3, 10), "schultz": (3, 10), "gutman": (3, 10), "edge-hosoya": (5, 10)},
        "path": {k: (3, 12) for k in KINDS},
    }
    for family, by_kind in ranges.items():
        for kind, (lo, hi) in by_kind.items():
            for n in range(lo, hi + 1):
                fam = GraphFamily(family, n)
                direct = build(family_graph(fam), kind)
                if direct != closed_form(fam, kind):
                    fail(f"closed form mismatch: {family} n={n} {kind}")


def _selftest_complete_roots(fail) -> None:
    for kind in ("hosoya", "schultz", "gutman"):
        for n in range(2, 11):
            got = root_index(build(family_graph(GraphFamily("complete", n)), kind)).delta
            want = complete_graph_root(kind, n)
            if abs(got - want) > 1e-12:
                fail(f"complete-graph root mismatch: {kind} n={n} {got} vs {want}")


def _selftest_bounds(fail) -> None:
    from .families import connected_graphs, free_trees

    pool = []
    for n in range(4, 11):
        pool.extend(free_trees(n))
    for n in range(3, 7):
        pool.extend(connected_graphs(n))
    for g in pool:
        for kind in KINDS:
            res = root_index(build(g, kind))
            if not res.delta > res.lower_bound:
                fail(f"root bound violated on n={g.n} m={g.m} {kind}")


def _selftest_counts(fail) -> None:
    from .families import connected_graphs, free_trees

    for n, want in enumerate(TREE_COUNTS, start=1):
        got = sum(1 for _ in free_trees(n))
        if got != want:
            fail(f"tree count mismatch at n={n}: {got} vs {want}")
    for n, want in enumerate(CONNECTED_COUNTS, start=1):
        got = sum(1 for _ in connected_graphs(n))
        if got != want:
            fail(f"connected count mismatch at n={n}: {got} vs {want}")


def _selftest_relabelling(seed: int, fail) -> None:
    from .families import free_trees

    rng = random.Random(seed)
    trees = list(free_trees(9))
    for _ in range(50):
        g = rng.choice(trees)
        perm = list(range(g.n))
        rng.shuffle(perm)
        relabeled = from_edge_list(g.n, [(perm[a], perm[b]) for a, b in g.edges])
        if canonical_form(g) != canonical_form(relabeled):
            fail(f"certificate changed under relabelling of {g.edges}")


def cmd_selftest(args) -> int:
    failures: list[str] = []
    suites = (
        ("closed forms", _selftest_closed_forms),
        ("complete-graph roots", _selftest_complete_roots),
        ("root lower bounds", _selftest_bounds),
        ("enumeration counts", _selftest_counts),
        ("relabelling invariance", lambda fail: _selftest_relabelling(args.seed, fail)),
    )
    for name, suite in suites:
        before = len(failures)
        suite(failures.append)
        status = "ok" if len(failures) == before else "FAILED"
        print(f"selftest: {name}: {status}")
    if failures:
        for line in failures:
            print(f"selftest failure: {line}", file=sys.stderr)
        return 3
    print("selftest: all suites passed")
    return 0


_COMMANDS = {
    "compute": cmd_compute,
    "discriminate": cmd_discriminate,
    "correlate": cmd_correlate,
    "sensitivity": cmd_sensitivity,
    "enumerate": cmd_enumerate,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 -- invariant violations get a distinct code
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

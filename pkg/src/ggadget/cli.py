"""Command-line front end: build, verify, induced-path, coloring, stats.

Every command emits a JSON report (or a serialized graph for `build`).
Reports are byte-identical across runs except for the `timing` field.
Exit codes: 0 success / all checks pass, 1 check failure or I/O error,
2 usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from contextlib import contextmanager
from datetime import datetime, timezone

from . import analysis, coloring, io as gio
from .construction import (
    DEFAULT_MAX_ELL,
    LabeledGraph,
    ResourceLimitError,
    build_ribbed_graph,
)
from .intervals import build_intervals, span, span_by_recurrence, validate

CHECK_NAMES = (
    "intervals",
    "sizes",
    "degeneracy",
    "hamiltonian",
    "coloring",
    "special-sources",
    "tau",
)

_DEFAULT_BUDGET = 10**9


def _max_ell() -> int:
    raw = os.environ.get("GGADGET_MAX_ELL", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_ELL
    except ValueError:
        raise ValueError(f"GGADGET_MAX_ELL must be an integer, got {raw!r}")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


@contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _emit_report(report: dict, started: float, out: str) -> None:
    report["timing"] = {
        "started_at": datetime.now(timezone.utc).isoformat(),
        "elapsed_s": round(time.perf_counter() - started, 3),
    }
    with _open_out(out) as fh:
        fh.write(json.dumps(report, indent=2) + "\n")


def _report_skeleton(command: str, params: dict) -> dict:
    return {"meta": {"tool": "ggadget", "command": command, "parameters": params}}


# -- verification checks ------------------------------------------------------


def _expected_rib_count(ell: int) -> int:
    return sum(4 * 2 ** (iv.lo - 1) * 2 ** (iv.hi - iv.lo) for iv in build_intervals(ell))


def _check_intervals(ell: int, g: LabeledGraph) -> dict:
    system = build_intervals(ell)
    problems = validate(system)
    if span_by_recurrence(ell) != span(ell):
        problems.append("span recurrence and closed form disagree")
    status = "pass" if not problems else "fail"
    result = {
        "name": "intervals",
        "status": status,
        "measured": {"count": len(system), "span": span(ell)},
    }
    if problems:
        result["counterexample"] = problems
    return result


def _check_sizes(ell: int, g: LabeledGraph) -> dict:
    num_nodes = 2**g.tree_depth - 1
    expected = {
        "num_vertices": 7 * num_nodes - 4,
        "clique": 3 * num_nodes,
        "tree": 6 * (num_nodes - 1),
        "rib": _expected_rib_count(ell),
    }
    counts = g.edge_counts()
    measured = {"num_vertices": g.num_vertices, **counts}
    problems = [
        f"{key}: expected {expected[key]}, got {measured[key]}"
        for key in expected
        if measured[key] != expected[key]
    ]
    floor = 2 ** (2 ** (ell + 1))
    if g.num_vertices < floor:
        problems.append(f"vertex count {g.num_vertices} below 2^(2^(ell+1)) = {floor}")
    result = {
        "name": "sizes",
        "status": "pass" if not problems else "fail",
        "measured": {**measured, "lower_bound": floor},
    }
    if problems:
        result["counterexample"] = problems
    return result


def _check_degeneracy(ell: int, g: LabeledGraph) -> dict:
    k, order = analysis.degeneracy(g)
    steps = analysis.elimination_degrees(g, order)
    worst = max(steps) if steps else 0
    problems = []
    if k != 2:
        problems.append(f"degeneracy {k} != 2")
    if worst > 2:
        problems.append(f"a peeling step removed a vertex of degree {worst}")
    result = {
        "name": "degeneracy",
        "status": "pass" if not problems else "fail",
        "measured": {"degeneracy": k, "max_step_degree": worst},
    }
    if problems:
        result["counterexample"] = problems
    return result


def _check_hamiltonian(ell: int, g: LabeledGraph) -> dict:
    path = analysis.hamiltonian_path(g)
    ok = analysis.verify_hamiltonian(g, path)
    a, b = g.top_edge(0)
    endpoints_ok = {path[0], path[-1]} == {a.id, b.id}
    problems = []
    if not ok:
        problems.append("constructed path is not Hamiltonian")
    if not endpoints_ok:
        problems.append(f"endpoints ({path[0]}, {path[-1]}) are not the root edge")
    result = {
        "name": "hamiltonian",
        "status": "pass" if not problems else "fail",
        "measured": {"order": len(path), "endpoints": [path[0], path[-1]]},
    }
    if problems:
        result["counterexample"] = problems
    return result


def _check_coloring(ell: int, g: LabeledGraph, r_max: int) -> dict:
    if ell > 2:
        return {
            "name": "coloring",
            "status": "skipped",
            "reason": "per-vertex reachability sweep configured only for ell <= 2",
        }
    report = coloring.check_linear_bound(g, r_max)
    bad = [row for row in report["rows"] if not (row["bound_ok"] and row["split_ok"])]
    result = {
        "name": "coloring",
        "status": "pass" if not bad else "fail",
        "measured": {"rows": report["rows"]},
    }
    if bad:
        result["counterexample"] = bad
    return result


def _check_special_sources(ell: int, g: LabeledGraph, budget: int) -> dict:
    if ell != 1:
        return {
            "name": "special-sources",
            "status": "skipped",
            "reason": "exhaustive enumeration configured only for ell = 1",
        }
    scan = analysis.scan_special_sources(g, budget=budget)
    problems = []
    if scan.status != "exact":
        problems.append(f"enumeration did not finish within budget {budget}")
    over = {rank: c for rank, c in scan.max_per_rank.items() if c > 2}
    if over:
        problems.append(f"ranks exceeding two special sources on one path: {over}")
    result = {
        "name": "special-sources",
        "status": "pass" if not problems else "fail",
        "measured": {
            "max_per_rank": scan.max_per_rank,
            "maximal_paths": scan.paths_checked,
            "status": scan.status,
        },
    }
    if problems:
        result["counterexample"] = problems
    return result


def _check_tau(ell: int, g: LabeledGraph) -> dict:
    problems = analysis.tau_edge_violations(g) + analysis.tau_boundary_violations(ell)
    result = {
        "name": "tau",
        "status": "pass" if not problems else "fail",
        "measured": {"edges_checked": g.num_edges},
    }
    if problems:
        result["counterexample"] = problems
    return result


# -- subcommands ---------------------------------------------------------------


def _cmd_build(args: argparse.Namespace) -> int:
    g = build_ribbed_graph(args.ell, max_ell=_max_ell())
    writer = {"json": gio.write_json, "dot": gio.write_dot, "edgelist": gio.write_edgelist}[
        args.format
    ]
    with _open_out(args.out) as fh:
        writer(g, fh)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.checks:
        names = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = sorted(set(names) - set(CHECK_NAMES))
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}; valid: {', '.join(CHECK_NAMES)}")
    else:
        names = list(CHECK_NAMES)

    g = build_ribbed_graph(args.ell, max_ell=_max_ell())
    results = []
    for name in names:
        if name == "intervals":
            results.append(_check_intervals(args.ell, g))
        elif name == "sizes":
            results.append(_check_sizes(args.ell, g))
        elif name == "degeneracy":
            results.append(_check_degeneracy(args.ell, g))
        elif name == "hamiltonian":
            results.append(_check_hamiltonian(args.ell, g))
        elif name == "coloring":
            results.append(_check_coloring(args.ell, g, args.r_max))
        elif name == "special-sources":
            results.append(_check_special_sources(args.ell, g, args.budget))
        elif name == "tau":
            results.append(_check_tau(args.ell, g))

    ok = all(r["status"] != "fail" for r in results)
    report = _report_skeleton(
        "verify", {"ell": args.ell, "checks": names, "r_max": args.r_max, "budget": args.budget}
    )
    report["checks"] = results
    report["ok"] = ok
    _emit_report(report, started, args.out)
    return 0 if ok else 1


def _cmd_induced_path(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    g = build_ribbed_graph(args.ell, max_ell=_max_ell())
    report = _report_skeleton(
        "induced-path",
        {
            "ell": args.ell,
            "mode": args.mode,
            "budget": args.budget,
            "seeds": args.seeds,
            "rng_seed": args.rng_seed,
        },
    )
    if args.mode == "exact":
        outcome = analysis.longest_induced_path(g, budget=args.budget)
        report["result"] = {
            "order": len(outcome.best),
            "status": outcome.status,
            "nodes_explored": outcome.nodes_explored,
            "witness": outcome.best,
        }
    else:
        best = analysis.heuristic_long_induced_path(g, args.seeds, args.rng_seed)
        report["result"] = {"order": len(best), "status": "heuristic", "witness": best}
    _emit_report(report, started, args.out)
    return 0


def _cmd_coloring(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    g = build_ribbed_graph(args.ell, max_ell=_max_ell())
    table = coloring.check_linear_bound(g, args.r_max)
    report = _report_skeleton("coloring", {"ell": args.ell, "r_max": args.r_max})
    report["rows"] = table["rows"]
    report["ok"] = table["all_ok"]
    _emit_report(report, started, args.out)
    return 0 if table["all_ok"] else 1


def _cmd_stats(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    g = build_ribbed_graph(args.ell, max_ell=_max_ell())
    report = _report_skeleton("stats", {"ell": args.ell})
    report["stats"] = g.stats()
    report["intervals"] = [
        {"lo": iv.lo, "hi": iv.hi, "rank": iv.rank} for iv in build_intervals(args.ell)
    ]
    report["sources_by_rank"] = {
        str(rank): count for rank, count in analysis.source_counts_by_rank(args.ell).items()
    }
    _emit_report(report, started, args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ggadget",
        description="Build and verify ribbed blow-ups of complete binary trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--ell", type=_positive_int, required=True, help="construction parameter")
        p.add_argument("--out", default="-", help="output path, or - for stdout")

    p = sub.add_parser("build", help="serialize the graph")
    common(p)
    p.add_argument("--format", choices=("json", "dot", "edgelist"), default="json")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("verify", help="run verification checks")
    common(p)
    p.add_argument("--checks", default="", help=f"comma list from: {','.join(CHECK_NAMES)}")
    p.add_argument("--r-max", type=_positive_int, default=10)
    p.add_argument("--budget", type=_nonneg_int, default=_DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("induced-path", help="search for long induced paths")
    common(p)
    p.add_argument("--mode", choices=("exact", "heuristic"), default="exact")
    p.add_argument("--budget", type=_nonneg_int, default=_DEFAULT_BUDGET)
    p.add_argument("--seeds", type=_positive_int, default=100)
    p.add_argument("--rng-seed", type=int, default=0)
    p.set_defaults(func=_cmd_induced_path)

    p = sub.add_parser("coloring", help="measure reachability against the 2r+8 bound")
    common(p)
    p.add_argument("--r-max", type=_positive_int, default=10)
    p.set_defaults(func=_cmd_coloring)

    p = sub.add_parser("stats", help="graph, interval, and source summaries")
    common(p)
    p.set_defaults(func=_cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"ggadget: resource guard: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"ggadget: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ggadget: i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

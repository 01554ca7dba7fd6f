"""Acceptance suite: one test per criterion, one printed line per criterion.

Combinatorial assertions are exact; runtime and memory envelopes are asserted
where a criterion states one.  Run with `pytest tests/test_acceptance.py -v -s`
to see the per-criterion lines.
"""

from __future__ import annotations

import gc
import json
import math
import os
import subprocess
import sys
import time
from pathlib import Path

import psutil

from ggadget.analysis import (
    degeneracy,
    elimination_degrees,
    hamiltonian_path,
    heuristic_long_induced_path,
    longest_induced_path,
    scan_special_sources,
    tau_boundary_violations,
    tau_edge_violations,
    verify_hamiltonian,
)
from ggadget.coloring import canonical_sigma, check_linear_bound
from ggadget.construction import blow_up, build_ribbed_graph
from ggadget.intervals import build_intervals, span, span_by_recurrence, validate
from ggadget.tree import Tree

from test_analysis import G1_LONGEST_INDUCED_PATH

FIXTURES = Path(__file__).parent / "fixtures"


def report(num: int, description: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {num}: {status} - {description}{suffix}")
    assert ok, f"criterion {num} failed: {description}{suffix}"


def test_criterion_1_interval_suite():
    started = time.perf_counter()
    ok = True
    for ell in range(1, 13):
        system = build_intervals(ell)
        ok &= validate(system) == []
        ok &= len(system) == 2**ell - 1
    for ell in range(1, 21):
        ok &= span_by_recurrence(ell) == span(ell)
    elapsed = time.perf_counter() - started
    ok &= elapsed < 1.0
    report(1, "interval systems validate with matching recurrence", ok, f"{elapsed:.3f}s")


def test_criterion_2_size_formulas(g1, g2):
    started = time.perf_counter()
    g3 = build_ribbed_graph(3)
    build_time = time.perf_counter() - started
    rss_gib = psutil.Process(os.getpid()).memory_info().rss / 2**30

    ok = True
    for ell, g in ((1, g1), (2, g2), (3, g3)):
        expected = 7 * (2 ** span(ell) - 1) - 4
        ok &= g.num_vertices == expected
        ok &= g.num_vertices >= 2 ** (2 ** (ell + 1))
    ok &= (g1.num_vertices, g2.num_vertices, g3.num_vertices) == (45, 1781, 1834997)
    ok &= build_time < 300.0
    ok &= rss_gib < 8.0
    del g3
    gc.collect()
    report(
        2,
        "vertex counts match 7*(2^span - 1) - 4 and the doubly exponential floor",
        ok,
        f"build {build_time:.2f}s, rss {rss_gib:.2f} GiB",
    )


def test_criterion_3_edge_census(g1):
    fixture = json.loads((FIXTURES / "g1_edges.json").read_text())
    expected = {(min(u, v), max(u, v), kind) for u, v, kind in fixture["edges"]}
    got = {(u, v, k.label) for u, v, k in g1.iter_edges()}
    counts = g1.edge_counts()
    ok = (
        got == expected
        and counts == {"clique": 21, "tree": 36, "rib": 16}
        and g1.num_edges == 73
    )
    report(3, "ell=1 edge census matches the hand-enumerated fixture", ok, "73 edges")


def test_criterion_4_hamiltonicity(g1, g2):
    ok = True
    for depth in range(1, 9):
        g = blow_up(Tree(depth))
        path = hamiltonian_path(g)
        ok &= verify_hamiltonian(g, path) and {path[0], path[-1]} == {0, 1}
    started = time.perf_counter()
    for g in (g1, g2):
        path = hamiltonian_path(g)
        a, b = g.top_edge(0)
        ok &= verify_hamiltonian(g, path) and {path[0], path[-1]} == {a.id, b.id}
    elapsed = time.perf_counter() - started
    ok &= elapsed < 10.0
    report(4, "Hamiltonian paths verified with root-edge endpoints", ok, f"{elapsed:.2f}s")


def test_criterion_5_degeneracy(g1, g2):
    started = time.perf_counter()
    ok = True
    for g in (g1, g2):
        k, order = degeneracy(g)
        steps = elimination_degrees(g, order)
        ok &= k == 2 and max(steps) <= 2 and len(order) == g.num_vertices
    elapsed = time.perf_counter() - started
    ok &= elapsed < 30.0
    report(5, "degeneracy exactly 2 with every peeling step at degree <= 2", ok, f"{elapsed:.2f}s")


def test_criterion_6_coloring_numbers(g1, g2):
    started = time.perf_counter()
    ok = True
    worst = 0
    for g in (g1, g2):
        result = check_linear_bound(g, 10)
        ok &= result["all_ok"]
        for row in result["rows"]:
            worst = max(worst, row["value"])
            ok &= row["value"] <= 2 * row["r"] + 8
            ok &= row["max_nonrib_final"] <= 8
            ok &= row["max_rib_final"] <= 2 * row["r"]
    elapsed = time.perf_counter() - started
    ok &= elapsed < 300.0
    report(6, "col_r <= 2r + 8 with 8/2r witness split for r = 1..10", ok,
           f"max value {worst}, {elapsed:.2f}s")


def test_criterion_7_induced_path_suite(g1):
    outcome = longest_induced_path(g1, budget=10**9)
    floor = math.ceil(math.log2(math.log2(45)) / math.log2(3))
    scan = scan_special_sources(g1, budget=10**9)
    ok = (
        outcome.status == "exact"
        and len(outcome.best) == G1_LONGEST_INDUCED_PATH
        and len(outcome.best) >= floor
        and scan.status == "exact"
        and all(count <= 2 for count in scan.max_per_rank.values())
    )
    report(
        7,
        "exhaustive search is exact, hits the frozen constant, and every "
        "maximal path stays within two special sources per rank",
        ok,
        f"order {len(outcome.best)}, {scan.paths_checked} maximal paths",
    )


def test_criterion_8_tau_consistency(g1, g2):
    started = time.perf_counter()
    ok = True
    for ell, g in ((1, g1), (2, g2)):
        ok &= tau_edge_violations(g) == []
        ok &= tau_boundary_violations(ell) == []
    elapsed = time.perf_counter() - started
    ok &= elapsed < 60.0
    report(8, "tau drops only across subdivision edges and only by one", ok, f"{elapsed:.2f}s")


def test_criterion_9_determinism(g1, g2):
    ok = build_ribbed_graph(1).same_as(g1) and build_ribbed_graph(2).same_as(g2)
    ok &= (canonical_sigma(g1).position == canonical_sigma(g1).position).all()
    ok &= heuristic_long_induced_path(g2, 30, 7) == heuristic_long_induced_path(g2, 30, 7)

    # CLI reports agree byte for byte (minus the timing field) across runs
    # with different hash seeds; the implementation is single-threaded, so
    # scheduling cannot introduce variation beyond this
    def run(seed: str) -> dict:
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run(
            [sys.executable, "-m", "ggadget", "verify", "--ell", "1"],
            capture_output=True, text=True, env=env, timeout=300,
        )
        assert proc.returncode == 0
        data = json.loads(proc.stdout)
        del data["timing"]
        return data

    ok &= json.dumps(run("0")) == json.dumps(run("1"))
    report(9, "builds, orderings, heuristics, and reports are reproducible", ok)

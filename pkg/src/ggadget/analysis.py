"""Structural checks and searches over blow-ups and ribbed graphs.

Everything here is read-only over an immutable LabeledGraph: Hamiltonian
path construction and verification, degeneracy by min-degree peeling, exact
and heuristic longest-induced-path search, and the depth-rank diagnostics
that explain why induced paths stay short.
"""

from __future__ import annotations

import heapq
import random
from typing import Callable, NamedTuple

import numpy as np

from .construction import EdgeKind, LabeledGraph, Role, vertex_id
from .intervals import build_intervals, span
from .tree import depth_of, is_ancestor

Path = list[int]


class SearchOutcome(NamedTuple):
    best: Path
    status: str  # "exact" | "budget_exhausted"
    nodes_explored: int


# -- Hamiltonian path -------------------------------------------------------


def hamiltonian_path(g: LabeledGraph) -> Path:
    """A Hamiltonian path between the two root-edge vertices.

    Uses only triangle and subdivision edges, so it works identically on a
    bare blow-up and on the ribbed graph over the same tree.  For a subtree
    rooted at s the path runs K0(s), down the left subdivision path into the
    first child's subtree, through it, back up, through K2(s), down into the
    second child's subtree, through it backwards, and back up to K1(s).
    """
    depth = g.tree_depth
    out: Path = []

    def emit(node: int, forward: bool) -> None:
        if depth_of(node) == depth:
            k0, k2, k1 = (vertex_id(node, r) for r in (Role.K0, Role.K2, Role.K1))
            out.extend((k0, k2, k1) if forward else (k1, k2, k0))
            return
        first_child, second_child = 2 * node + 1, 2 * node + 2
        if not forward:
            first_child, second_child = second_child, first_child
        a = 3 + 7 * (first_child - 1)
        b = 3 + 7 * (second_child - 1)
        out.append(vertex_id(node, Role.K0 if forward else Role.K1))
        out.extend((a + Role.X1, a + Role.Y1))
        emit(first_child, True)
        out.extend((a + Role.Y2, a + Role.X2, vertex_id(node, Role.K2), b + Role.X2, b + Role.Y2))
        emit(second_child, False)
        out.extend((b + Role.Y1, b + Role.X1))
        out.append(vertex_id(node, Role.K1 if forward else Role.K0))

    emit(0, True)
    return out


def verify_hamiltonian(g: LabeledGraph, path: Path) -> bool:
    """True iff path visits every vertex exactly once along edges of g."""
    n = g.num_vertices
    if len(path) != n or n == 0:
        return False
    if len(set(path)) != n:
        return False
    if min(path) < 0 or max(path) >= n:
        return False
    return all(g.has_edge(u, v) for u, v in zip(path, path[1:]))


# -- degeneracy -------------------------------------------------------------


def degeneracy(g: LabeledGraph) -> tuple[int, Path]:
    """Peel minimum-degree vertices (ties: smallest id).

    Returns the largest degree seen at removal time and the elimination
    order witnessing it.
    """
    n = g.num_vertices
    if n == 0:
        return 0, []
    deg = np.diff(g._indptr).tolist()
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = bytearray(n)
    order: Path = []
    k = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = 1
        if d > k:
            k = d
        order.append(v)
        for w in g.neighbors(v).tolist():
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return k, order


def elimination_degrees(g: LabeledGraph, order: Path) -> list[int]:
    """Degree of each vertex at its removal step, recomputed from the order.

    Independent of the peeling internals: the degree at removal is the
    number of neighbors that come later in the order.
    """
    pos = {v: i for i, v in enumerate(order)}
    return [sum(1 for w in g.neighbors(v).tolist() if pos[w] > i) for i, v in enumerate(order)]


# -- induced paths ----------------------------------------------------------


def is_induced_path(g: LabeledGraph, path: Path) -> bool:
    """True iff path is a chordless path of g (single vertices count)."""
    if not path:
        return False
    if len(set(path)) != len(path):
        return False
    if any(not 0 <= v < g.num_vertices for v in path):
        return False
    pos = {v: i for i, v in enumerate(path)}
    for i, u in enumerate(path):
        row = g.neighbors(u).tolist()
        if i + 1 < len(path) and path[i + 1] not in row:
            return False
        for w in row:
            j = pos.get(w)
            if j is not None and abs(i - j) > 1:
                return False
    return True


def longest_induced_path(
    g: LabeledGraph,
    budget: int | None = None,
    maximal_callback: Callable[[Path], None] | None = None,
) -> SearchOutcome:
    """Exhaustive depth-first search over induced paths.

    Each path is extended at its last vertex by neighbors (ascending id)
    that are not adjacent to any earlier path vertex.  A path is counted
    once: when its first id is below its last, plus single-vertex paths.
    Ties for the longest path go to the lexicographically smallest vertex
    sequence.  The budget caps extension attempts; running out is reported
    in the status, never raised.  ``maximal_callback`` receives every
    counted path that cannot be extended at either end.
    """
    n = g.num_vertices
    if n == 0:
        return SearchOutcome([], "exact", 0)
    nbrs = [g.neighbors(u).tolist() for u in range(n)]
    amask = [0] * n
    for u in range(n):
        m = 0
        for w in nbrs[u]:
            m |= 1 << w
        amask[u] = m

    best: Path = [0]
    attempts = 0
    limit = budget if budget is not None else float("inf")
    out_of_budget = False

    for start in range(n):
        path = [start]
        pmask = 1 << start
        # frames: neighbor row, next index, mask of path minus its last vertex,
        # and whether this frame extended at least once
        rows = [nbrs[start]]
        idxs = [0]
        emasks = [0]
        grew = [False]
        while rows:
            row = rows[-1]
            i = idxs[-1]
            emask = emasks[-1]
            pushed = False
            while i < len(row):
                w = row[i]
                i += 1
                attempts += 1
                if attempts > limit:
                    out_of_budget = True
                    break
                wb = 1 << w
                if pmask & wb or amask[w] & emask:
                    continue
                # push w
                idxs[-1] = i
                grew[-1] = True
                path.append(w)
                emasks.append(pmask)
                pmask |= wb
                rows.append(nbrs[w])
                idxs.append(0)
                grew.append(False)
                if start < w:
                    q = len(path)
                    if q > len(best) or (q == len(best) and path < best):
                        best = path.copy()
                pushed = True
                break
            if out_of_budget:
                break
            if pushed:
                continue
            idxs[-1] = i
            if maximal_callback is not None and not grew[-1]:
                # right-maximal; the path is maximal iff the start can't grow either
                smask = pmask ^ (1 << start)
                if not any(
                    not (pmask >> z) & 1 and not amask[z] & smask for z in nbrs[start]
                ):
                    if start < path[-1] or len(path) == 1:
                        maximal_callback(path.copy())
            # pop
            w = path.pop()
            pmask ^= 1 << w
            rows.pop()
            idxs.pop()
            emasks.pop()
            grew.pop()
        if out_of_budget:
            break

    status = "budget_exhausted" if out_of_budget else "exact"
    return SearchOutcome(best, status, attempts)


def heuristic_long_induced_path(g: LabeledGraph, seeds: int, rng_seed: int) -> Path:
    """Randomized greedy probe for long induced paths.

    Restarts from ``seeds`` random vertices; each restart grows the path at
    the back and then at the front, always taking a deepest valid neighbor
    with uniform random tie-breaks.  Deterministic for a fixed rng_seed.
    """
    if seeds < 1:
        raise ValueError(f"seeds must be >= 1, got {seeds}")
    n = g.num_vertices
    if n == 0:
        return []
    rng = random.Random(rng_seed)
    depths = g.vertex_depths().tolist()
    nbrs = [g.neighbors(u).tolist() for u in range(n)]
    hit = [0] * n  # number of path vertices adjacent to each vertex
    in_path = bytearray(n)
    best: Path = []

    def grow(path: Path, at_back: bool) -> None:
        while True:
            end = path[-1] if at_back else path[0]
            cands = [w for w in nbrs[end] if not in_path[w] and hit[w] == 1]
            if not cands:
                return
            deepest = max(depths[w] for w in cands)
            w = rng.choice([c for c in cands if depths[c] == deepest])
            (path.append(w) if at_back else path.insert(0, w))
            in_path[w] = 1
            for z in nbrs[w]:
                hit[z] += 1

    for _ in range(seeds):
        start = rng.randrange(n)
        path = [start]
        in_path[start] = 1
        for z in nbrs[start]:
            hit[z] += 1
        grow(path, at_back=True)
        grow(path, at_back=False)
        if len(path) > len(best):
            best = path.copy()
        for v in path:
            in_path[v] = 0
            for z in nbrs[v]:
                hit[z] -= 1
    return best


# -- depth-rank diagnostics -------------------------------------------------


def tau(ell: int, depth: int) -> int:
    """Minimum rank of an interval strictly containing ``depth``; ell+1 if none.

    Depends on depth only: every node at a depth strictly inside an interval
    has an ancestor at the interval's start whose subtree contains it.
    """
    if not 1 <= depth <= span(ell):
        raise ValueError(f"depth {depth} outside [1, {span(ell)}] for ell={ell}")
    ranks = [iv.rank for iv in build_intervals(ell) if iv.strictly_contains(depth)]
    return min(ranks) if ranks else ell + 1


def tau_table(ell: int) -> list[int]:
    """tau for every depth, as a list indexed by depth (index 0 unused)."""
    table = [ell + 1] * (span(ell) + 1)
    table[0] = 0
    for iv in build_intervals(ell):
        for d in range(iv.lo + 1, iv.hi):
            if iv.rank < table[d]:
                table[d] = iv.rank
    return table


def sources(ell: int) -> list[tuple[int, int]]:
    """All (node, rank) pairs where the node's depth starts an interval."""
    out: list[tuple[int, int]] = []
    for iv in build_intervals(ell):
        first = 2 ** (iv.lo - 1) - 1
        out.extend((node, iv.rank) for node in range(first, 2**iv.lo - 1))
    out.sort()
    return out


def source_counts_by_rank(ell: int) -> dict[int, int]:
    """Number of interval-start nodes per rank, without enumerating them."""
    counts: dict[int, int] = {}
    for iv in build_intervals(ell):
        counts[iv.rank] = counts.get(iv.rank, 0) + 2 ** (iv.lo - 1)
    return dict(sorted(counts.items()))


def _special_sources(g: LabeledGraph, path: Path) -> list[tuple[int, int]]:
    system = build_intervals(g.ell)
    rank_at_lo = {iv.lo: iv.rank for iv in system}
    nodes = [g.node_of(v) for v in path]
    candidates: dict[int, int] = {}
    for v in path:
        if g.role_of(v) <= Role.K1:
            s = g.node_of(v)
            rank = rank_at_lo.get(depth_of(s))
            if rank is not None:
                candidates[s] = rank
    hits: list[tuple[int, int]] = []
    for s, rank in candidates.items():
        end_depth = depth_of(s) + span(rank) - 1
        if any(t != s and depth_of(t) < end_depth and is_ancestor(s, t) for t in nodes):
            hits.append((s, rank))
    hits.sort(key=lambda sr: (sr[1], sr[0]))
    return hits


def q_special_sources(g: LabeledGraph, path: Path) -> list[tuple[int, int]]:
    """Interval-start nodes whose top edge the path touches while it also
    visits the strict inside of their interval subtree.

    Returns (node, rank) pairs sorted by (rank, node).  The input must be an
    induced path of a ribbed graph.
    """
    if g.ell is None:
        raise ValueError("graph carries no interval system (bare blow-up)")
    if not is_induced_path(g, path):
        raise ValueError("path is not an induced path of the graph")
    return _special_sources(g, path)


class SpecialSourceScan(NamedTuple):
    max_per_rank: dict[int, int]
    status: str
    paths_checked: int
    nodes_explored: int


def scan_special_sources(g: LabeledGraph, budget: int | None = None) -> SpecialSourceScan:
    """Exhaustively enumerate maximal induced paths and bound, per rank, the
    number of special sources any single path produces.

    Special-source sets only grow under path extension, so the maximum over
    maximal paths covers all induced paths.
    """
    if g.ell is None:
        raise ValueError("graph carries no interval system (bare blow-up)")
    max_per_rank: dict[int, int] = {iv.rank: 0 for iv in build_intervals(g.ell)}
    checked = 0

    def on_maximal(path: Path) -> None:
        nonlocal checked
        checked += 1
        counts: dict[int, int] = {}
        for _, rank in _special_sources(g, path):
            counts[rank] = counts.get(rank, 0) + 1
        for rank, c in counts.items():
            if c > max_per_rank[rank]:
                max_per_rank[rank] = c

    outcome = longest_induced_path(g, budget=budget, maximal_callback=on_maximal)
    return SpecialSourceScan(max_per_rank, outcome.status, checked, outcome.nodes_explored)


def tau_edge_violations(g: LabeledGraph) -> list[str]:
    """Edges whose endpoint tau values drop by more than 1 or drop across a
    non-subdivision edge.  Empty on correctly built ribbed graphs.
    """
    if g.ell is None:
        raise ValueError("graph carries no interval system (bare blow-up)")
    table = np.asarray(tau_table(g.ell), dtype=np.int64)
    depths = g.vertex_depths()
    eu, ev, ek = g.edge_arrays()
    tu, tv = table[depths[eu]], table[depths[ev]]
    # orient each edge so the tau-larger endpoint comes first
    swap = tu < tv
    tu2 = np.where(swap, tv, tu)
    tv2 = np.where(swap, tu, tv)
    drop = tu2 > tv2
    bad = drop & ((ek != int(EdgeKind.TREE)) | (tu2 != tv2 + 1))
    out = []
    for idx in np.flatnonzero(bad)[:20]:
        out.append(
            f"edge ({int(eu[idx])}, {int(ev[idx])}) kind {EdgeKind(int(ek[idx])).label}: "
            f"tau {int(tu[idx])} -> {int(tv[idx])}"
        )
    remaining = int(bad.sum()) - len(out)
    if remaining > 0:
        out.append(f"... and {remaining} more")
    return out


def tau_boundary_violations(ell: int) -> list[str]:
    """Check tau == rank + 1 at both endpoints of every interval."""
    table = tau_table(ell)
    out = []
    for iv in build_intervals(ell):
        for d in (iv.lo, iv.hi):
            if table[d] != iv.rank + 1:
                out.append(f"tau({d}) = {table[d]}, expected {iv.rank + 1} at boundary of {iv}")
    return out

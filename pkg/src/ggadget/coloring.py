"""Reachability orderings and generalized coloring numbers.

A vertex y is r-reachable from x under an ordering when y comes before x
and some path of at most r edges links them with every internal vertex
coming after x.  The maximum count over x upper-bounds the r-coloring
number; under the canonical tree-respecting ordering the ribbed graphs
stay below 2r + 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .construction import EdgeKind, LabeledGraph


@dataclass(frozen=True)
class Ordering:
    """A total order on vertex ids: position[v] is v's rank in [0, n)."""

    position: np.ndarray

    def __post_init__(self):
        pos = np.asarray(self.position, dtype=np.int64)
        n = pos.size
        if not np.array_equal(np.sort(pos), np.arange(n)):
            raise ValueError("positions are not a permutation of 0..n-1")
        pos.setflags(write=False)
        object.__setattr__(self, "position", pos)

    @classmethod
    def from_order(cls, order: Iterable[int]) -> "Ordering":
        """Ordering placing the given vertex sequence first to last."""
        order = np.asarray(list(order), dtype=np.int64)
        pos = np.empty_like(order)
        pos[order] = np.arange(order.size)
        return cls(pos)

    def __len__(self) -> int:
        return self.position.size


def canonical_sigma(g: LabeledGraph) -> Ordering:
    """Sort vertices by (node depth, node index, role).

    Ancestor bags always precede descendant bags, which is the property the
    2r + 8 bound needs; the rest of the key just pins a deterministic order.
    """
    depths = g.vertex_depths()
    nodes = g.node_ids()
    roles = np.arange(g.num_vertices, dtype=np.int64)
    roles = np.where(roles < 3, roles, (roles - 3) % 7)
    order = np.lexsort((roles, nodes, depths))
    pos = np.empty(g.num_vertices, dtype=np.int64)
    pos[order] = np.arange(g.num_vertices)
    return Ordering(pos)


def _reach_profile(
    g: LabeledGraph, pos: np.ndarray, x: int, r: int
) -> dict[int, tuple[int, int]]:
    """For each r-reachable y: (shortest qualifying path length, witness).

    The witness is the y-neighbor on a shortest qualifying path, smallest id
    first; the edge witness-y is the path's final edge.
    """
    px = pos[x]
    dist = {x: 0}
    frontier = [x]
    found: dict[int, tuple[int, int]] = {}
    for layer in range(r):
        nxt: list[int] = []
        for z in frontier:
            for w in g.neighbors(z).tolist():
                if pos[w] < px:
                    prev = found.get(w)
                    if prev is None:
                        found[w] = (layer + 1, z)
                    elif prev[0] == layer + 1 and z < prev[1]:
                        found[w] = (layer + 1, z)
                elif w not in dist:
                    dist[w] = layer + 1
                    nxt.append(w)
        frontier = nxt
    return found


def r_reachable(g: LabeledGraph, ordering: Ordering, x: int, r: int) -> set[int]:
    """The set of vertices r-reachable from x under the ordering."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return set(_reach_profile(g, ordering.position, x, r).keys())


def col_r_value(g: LabeledGraph, ordering: Ordering, r: int) -> tuple[int, int]:
    """Max r-reachable count over all vertices, with the smallest witness id."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    pos = ordering.position
    best, witness = -1, 0
    for x in range(g.num_vertices):
        count = len(_reach_profile(g, pos, x, r))
        if count > best:
            best, witness = count, x
    return best, witness


def check_linear_bound(
    g: LabeledGraph, r_max: int, ordering: Ordering | None = None
) -> dict:
    """Measure reachability for r = 1..r_max and test the 2r + 8 bound.

    Also splits, per vertex, the reachable set by the kind of the final edge
    on a canonical shortest witness path: at most 8 may end on a non-rib
    edge and at most 2r on a rib.  One breadth-first sweep per vertex at
    radius r_max serves every smaller r, because a vertex reachable within
    r keeps its shortest witness.
    """
    if r_max < 1:
        raise ValueError(f"r_max must be >= 1, got {r_max}")
    if ordering is None:
        ordering = canonical_sigma(g)
    pos = ordering.position

    per_r = {
        r: {"value": 0, "witness": 0, "max_rib_final": 0, "max_nonrib_final": 0}
        for r in range(1, r_max + 1)
    }
    for x in range(g.num_vertices):
        profile = _reach_profile(g, pos, x, r_max)
        if not profile:
            continue
        lengths = sorted(
            (m, g.edge_kind(z, y) == EdgeKind.RIB) for y, (m, z) in profile.items()
        )
        total = rib = 0
        i = 0
        for r in range(1, r_max + 1):
            while i < len(lengths) and lengths[i][0] <= r:
                total += 1
                rib += lengths[i][1]
                i += 1
            row = per_r[r]
            if total > row["value"]:
                row["value"], row["witness"] = total, x
            if rib > row["max_rib_final"]:
                row["max_rib_final"] = rib
            if total - rib > row["max_nonrib_final"]:
                row["max_nonrib_final"] = total - rib

    rows = []
    for r in range(1, r_max + 1):
        row = per_r[r]
        bound = 2 * r + 8
        rows.append(
            {
                "r": r,
                "value": row["value"],
                "bound": bound,
                "witness": row["witness"],
                "max_rib_final": row["max_rib_final"],
                "rib_cap": 2 * r,
                "max_nonrib_final": row["max_nonrib_final"],
                "nonrib_cap": 8,
                "bound_ok": row["value"] <= bound,
                "split_ok": row["max_rib_final"] <= 2 * r and row["max_nonrib_final"] <= 8,
            }
        )
    return {
        "r_max": r_max,
        "rows": rows,
        "all_ok": all(r["bound_ok"] and r["split_ok"] for r in rows),
    }

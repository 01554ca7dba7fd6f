"""Graph serialization: canonical JSON, DOT, and plain edge lists.

Writers stream row by row so multi-million-edge graphs never pass through
one giant in-memory string.  The JSON layout is fixed and diffable: edges
sorted by (u, v) with u < v, one element per line.
"""

from __future__ import annotations

import json
from typing import IO

import numpy as np

from .construction import EdgeKind, LabeledGraph, Role
from .intervals import build_intervals

_RIB_PALETTE = ("green", "blue", "orange", "red", "purple", "brown", "cyan", "magenta")


def write_json(g: LabeledGraph, fh: IO[str]) -> None:
    ell = "null" if g.ell is None else str(g.ell)
    fh.write(
        f'{{"ell": {ell}, "tree_depth": {g.tree_depth}, '
        f'"num_vertices": {g.num_vertices},\n"vertices": [\n'
    )
    nodes = g.node_ids()
    depths = g.vertex_depths()
    n = g.num_vertices
    for vid in range(n):
        role = Role(vid if vid < 3 else (vid - 3) % 7)
        sep = "," if vid + 1 < n else ""
        fh.write(
            f'{{"id": {vid}, "node": {int(nodes[vid])}, '
            f'"depth": {int(depths[vid])}, "role": "{role.name}"}}{sep}\n'
        )
    fh.write('],\n"edges": [\n')
    eu, ev, ek = g.edge_arrays()
    m = eu.size
    labels = [k.label for k in EdgeKind]
    for i, (u, v, k) in enumerate(zip(eu.tolist(), ev.tolist(), ek.tolist())):
        sep = "," if i + 1 < m else ""
        fh.write(f'{{"u": {u}, "v": {v}, "kind": "{labels[k]}"}}{sep}\n')
    fh.write("]}\n")


def load_json(fh: IO[str]) -> LabeledGraph:
    """Rebuild a graph from :func:`write_json` output."""
    data = json.load(fh)
    for key in ("ell", "tree_depth", "num_vertices", "vertices", "edges"):
        if key not in data:
            raise ValueError(f"graph JSON is missing key {key!r}")
    if len(data["vertices"]) != data["num_vertices"]:
        raise ValueError("vertex table length disagrees with num_vertices")
    kind_by_label = {k.label: k for k in EdgeKind}
    edges = [(e["u"], e["v"], kind_by_label[e["kind"]]) for e in data["edges"]]
    return LabeledGraph.from_edges(
        data["num_vertices"], edges, ell=data["ell"], tree_depth=data["tree_depth"]
    )


def _rib_color(ranks: dict[tuple[int, int], int], du: int, dv: int) -> str:
    rank = ranks.get((min(du, dv), max(du, dv)), 1)
    return _RIB_PALETTE[(rank - 1) % len(_RIB_PALETTE)]


def write_dot(g: LabeledGraph, fh: IO[str]) -> None:
    """DOT export: solid triangle edges, dashed subdivision edges, ribs
    colored by interval rank."""
    ranks: dict[tuple[int, int], int] = {}
    if g.ell is not None:
        ranks = {(iv.lo, iv.hi): iv.rank for iv in build_intervals(g.ell)}
    fh.write("graph ribbed {\n  node [shape=circle fontsize=8];\n")
    nodes = g.node_ids()
    for vid in range(g.num_vertices):
        role = Role(vid if vid < 3 else (vid - 3) % 7)
        fh.write(f'  v{vid} [label="{int(nodes[vid])}:{role.name}"];\n')
    depths = g.vertex_depths()
    for u, v, k in g.iter_edges():
        if k == EdgeKind.CLIQUE:
            attr = "style=solid"
        elif k == EdgeKind.TREE:
            attr = "style=dashed"
        else:
            attr = f"color={_rib_color(ranks, int(depths[u]), int(depths[v]))}"
        fh.write(f"  v{u} -- v{v} [{attr}];\n")
    fh.write("}\n")


def write_edgelist(g: LabeledGraph, fh: IO[str]) -> None:
    """One `u v kind` line per edge, sorted by (u, v)."""
    eu, ev, ek = g.edge_arrays()
    labels = [k.label for k in EdgeKind]
    for u, v, k in zip(eu.tolist(), ev.tolist(), ek.tolist()):
        fh.write(f"{u} {v} {labels[k]}\n")

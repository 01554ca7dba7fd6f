"""Blow-ups of complete binary trees and their ribbed extensions.

Each tree node becomes a triangle; each tree edge becomes two 3-edge
subdivision paths wired to fixed triangle corners; ribs then connect the
K0/K1 corners of triangles at interval start depths to the subdivision
vertices of their descendants at the matching end depths.

Vertex ids are dense and purely arithmetic: the root triangle takes ids
0, 1, 2 and every other tree node m takes the 7-id block starting at
3 + 7 * (m - 1), in role order K0, K1, K2, X1, X2, Y1, Y2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .intervals import IntervalSystem, build_intervals, span
from .tree import Tree, depth_of, is_ancestor

DEFAULT_MAX_ELL = 3

# int64 vertex ids cap the usable tree depth
_MAX_TREE_DEPTH = 59


class ResourceLimitError(RuntimeError):
    """Raised before any allocation when a build would exceed the guard."""


class Role(IntEnum):
    K0 = 0
    K1 = 1
    K2 = 2
    X1 = 3
    X2 = 4
    Y1 = 5
    Y2 = 6


class EdgeKind(IntEnum):
    CLIQUE = 0
    TREE = 1
    RIB = 2

    @property
    def label(self) -> str:
        return self.name.lower()


KIND_LABELS = tuple(k.label for k in EdgeKind)


def vertex_id(node: int, role: Role | int) -> int:
    """Dense id of (node, role); the root only carries K0, K1, K2."""
    if node == 0:
        if role > Role.K2:
            raise ValueError(f"root carries no subdivision role {Role(role).name}")
        return int(role)
    return 3 + 7 * (node - 1) + int(role)


@dataclass(frozen=True)
class Vertex:
    """A graph vertex: its tree node, its role, and its dense id."""

    node: int
    role: Role
    id: int

    @classmethod
    def at(cls, node: int, role: Role | int) -> "Vertex":
        role = Role(role)
        return cls(node, role, vertex_id(node, role))


def vertex_at(vid: int) -> Vertex:
    """Inverse of the id scheme."""
    if vid < 0:
        raise ValueError(f"vertex id must be >= 0, got {vid}")
    if vid < 3:
        return Vertex(0, Role(vid), vid)
    node, role = divmod(vid - 3, 7)
    return Vertex(node + 1, Role(role), vid)


class LabeledGraph:
    """Immutable simple graph with an edge kind on every edge.

    Stored as a CSR adjacency over dense vertex ids, with a parallel kind
    array, so membership and kind lookups are binary searches in the sorted
    neighbor row.  ``ell`` is None for bare blow-ups.
    """

    def __init__(
        self,
        *,
        ell: int | None,
        tree_depth: int,
        num_vertices: int,
        indptr: np.ndarray,
        adj: np.ndarray,
        adj_kind: np.ndarray,
    ):
        self.ell = ell
        self.tree_depth = tree_depth
        self.num_vertices = num_vertices
        self._indptr = indptr
        self._adj = adj
        self._adj_kind = adj_kind
        # first level-order index of each depth, for vectorized depth lookups
        self._depth_starts = (1 << np.arange(tree_depth, dtype=np.int64)) - 1
        for arr in (indptr, adj, adj_kind):
            arr.setflags(write=False)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        num_vertices: int,
        edges: "list[tuple[int, int, EdgeKind | int]] | tuple[np.ndarray, np.ndarray, np.ndarray]",
        *,
        ell: int | None = None,
        tree_depth: int = 1,
    ) -> "LabeledGraph":
        """Build from an undirected edge list (used by loaders and tests)."""
        if isinstance(edges, tuple):
            eu, ev, ek = edges
        else:
            eu = np.fromiter((e[0] for e in edges), dtype=np.int64, count=len(edges))
            ev = np.fromiter((e[1] for e in edges), dtype=np.int64, count=len(edges))
            ek = np.fromiter((int(e[2]) for e in edges), dtype=np.uint8, count=len(edges))
        if eu.size and (eu.min() < 0 or max(eu.max(), ev.max() if ev.size else 0) >= num_vertices):
            raise ValueError("edge endpoint outside vertex range")
        if np.any(eu == ev):
            raise ValueError("self-loops are not allowed")
        du = np.concatenate([eu, ev])
        dv = np.concatenate([ev, eu])
        dk = np.concatenate([ek, ek])
        order = np.lexsort((dv, du))
        du, dv, dk = du[order], dv[order], dk[order]
        if du.size and np.any((du[1:] == du[:-1]) & (dv[1:] == dv[:-1])):
            raise ValueError("duplicate edge")
        indptr = np.zeros(num_vertices + 1, dtype=np.int64)
        np.cumsum(np.bincount(du, minlength=num_vertices), out=indptr[1:])
        return cls(
            ell=ell,
            tree_depth=tree_depth,
            num_vertices=num_vertices,
            indptr=indptr,
            adj=dv,
            adj_kind=dk,
        )

    # -- basic queries -----------------------------------------------------

    @property
    def num_edges(self) -> int:
        return self._adj.size // 2

    def neighbors(self, u: int) -> np.ndarray:
        """Sorted neighbor ids of u (a read-only view)."""
        return self._adj[self._indptr[u] : self._indptr[u + 1]]

    def degree(self, u: int) -> int:
        return int(self._indptr[u + 1] - self._indptr[u])

    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_kind(u, v) is not None

    def edge_kind(self, u: int, v: int) -> EdgeKind | None:
        """Kind of the edge uv, or None if uv is not an edge."""
        lo, hi = self._indptr[u], self._indptr[u + 1]
        pos = lo + np.searchsorted(self._adj[lo:hi], v)
        if pos < hi and self._adj[pos] == v:
            return EdgeKind(self._adj_kind[pos])
        return None

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Undirected edges as (u, v, kind) arrays, u < v, sorted by (u, v)."""
        du = np.repeat(np.arange(self.num_vertices, dtype=np.int64), np.diff(self._indptr))
        mask = du < self._adj
        return du[mask], self._adj[mask], self._adj_kind[mask]

    def iter_edges(self):
        """Yield (u, v, EdgeKind) with u < v, sorted by (u, v)."""
        eu, ev, ek = self.edge_arrays()
        for u, v, k in zip(eu.tolist(), ev.tolist(), ek.tolist()):
            yield u, v, EdgeKind(k)

    # -- tree labeling -----------------------------------------------------

    def node_of(self, vid: int) -> int:
        return 0 if vid < 3 else (vid - 3) // 7 + 1

    def role_of(self, vid: int) -> Role:
        return Role(vid if vid < 3 else (vid - 3) % 7)

    def vertex(self, vid: int) -> Vertex:
        return vertex_at(vid)

    def vertex_depth(self, vid: int) -> int:
        return depth_of(self.node_of(vid))

    def node_ids(self) -> np.ndarray:
        """Tree node of every vertex id, vectorized."""
        ids = np.arange(self.num_vertices, dtype=np.int64)
        nodes = np.where(ids < 3, 0, (ids - 3) // 7 + 1)
        return nodes

    def vertex_depths(self) -> np.ndarray:
        """Depth of every vertex id, vectorized."""
        return np.searchsorted(self._depth_starts, self.node_ids(), side="right").astype(
            np.int64
        )

    def top_edge(self, node: int) -> tuple[Vertex, Vertex]:
        """The distinguished (K0, K1) triangle edge of a node's clique."""
        self._check_node(node)
        return Vertex.at(node, Role.K0), Vertex.at(node, Role.K1)

    def bag(self, node: int) -> list[Vertex]:
        """All vertices originating from one tree node, in role order."""
        self._check_node(node)
        roles = (Role.K0, Role.K1, Role.K2) if node == 0 else tuple(Role)
        return [Vertex.at(node, r) for r in roles]

    def _check_node(self, node: int) -> None:
        if not 0 <= node < 2**self.tree_depth - 1:
            raise ValueError(f"node {node} outside tree of depth {self.tree_depth}")

    # -- summaries ---------------------------------------------------------

    def edge_counts(self) -> dict[str, int]:
        _, _, ek = self.edge_arrays()
        counts = np.bincount(ek, minlength=3)
        return {EdgeKind(k).label: int(counts[k]) for k in range(3)}

    def stats(self) -> dict:
        degs = self.degrees()
        hist = np.bincount(degs) if degs.size else np.zeros(0, dtype=np.int64)
        return {
            "num_vertices": self.num_vertices,
            "num_edges": self.num_edges,
            "edges_by_kind": self.edge_counts(),
            "max_degree": int(degs.max()) if degs.size else 0,
            "degree_histogram": {int(d): int(c) for d, c in enumerate(hist) if c},
        }

    def same_as(self, other: "LabeledGraph") -> bool:
        """Exact structural equality (used by determinism checks)."""
        return (
            self.ell == other.ell
            and self.tree_depth == other.tree_depth
            and self.num_vertices == other.num_vertices
            and np.array_equal(self._indptr, other._indptr)
            and np.array_equal(self._adj, other._adj)
            and np.array_equal(self._adj_kind, other._adj_kind)
        )


def _node_role_ids(nodes: np.ndarray, role: int) -> np.ndarray:
    # root block is 3 ids wide, all other blocks 7; role <= K2 whenever node 0 appears
    return np.where(nodes == 0, role, 3 + 7 * (nodes - 1) + role)


def _build(tree_depth: int, system: IntervalSystem | None, ell: int | None) -> LabeledGraph:
    if tree_depth > _MAX_TREE_DEPTH:
        raise OverflowError(f"tree depth {tree_depth} exceeds the 64-bit id space")
    num_nodes = 2**tree_depth - 1
    num_vertices = 7 * num_nodes - 4

    chunks_u: list[np.ndarray] = []
    chunks_v: list[np.ndarray] = []
    chunks_k: list[np.ndarray] = []

    def emit(u: np.ndarray, v: np.ndarray, kind: EdgeKind) -> None:
        chunks_u.append(u.astype(np.int64, copy=False))
        chunks_v.append(v.astype(np.int64, copy=False))
        chunks_k.append(np.full(u.size, int(kind), dtype=np.uint8))

    # triangles: K0K1, K0K2, K1K2 per node
    all_nodes = np.arange(num_nodes, dtype=np.int64)
    k0 = _node_role_ids(all_nodes, Role.K0)
    k1 = _node_role_ids(all_nodes, Role.K1)
    k2 = _node_role_ids(all_nodes, Role.K2)
    emit(k0, k1, EdgeKind.CLIQUE)
    emit(k0, k2, EdgeKind.CLIQUE)
    emit(k1, k2, EdgeKind.CLIQUE)

    # subdivision paths: for each child c of s, the left path starts at K0(s)
    # for a left child and K1(s) for a right child and runs X1(c), Y1(c), K0(c);
    # the right path always starts at K2(s) and runs X2(c), Y2(c), K1(c)
    if num_nodes > 1:
        child = np.arange(1, num_nodes, dtype=np.int64)
        par = (child - 1) // 2
        left = child % 2 == 1
        base = 3 + 7 * (child - 1)
        x1, x2, y1, y2 = base + 3, base + 4, base + 5, base + 6
        u1 = np.where(left, _node_role_ids(par, Role.K0), _node_role_ids(par, Role.K1))
        u2 = _node_role_ids(par, Role.K2)
        emit(u1, x1, EdgeKind.TREE)
        emit(x1, y1, EdgeKind.TREE)
        emit(y1, base + Role.K0, EdgeKind.TREE)
        emit(u2, x2, EdgeKind.TREE)
        emit(x2, y2, EdgeKind.TREE)
        emit(y2, base + Role.K1, EdgeKind.TREE)

    # ribs: K0 of each interval-start node to X1/X2 of every descendant at the
    # interval end depth, and K1 to Y1/Y2 of the same descendants
    if system is not None:
        for iv in system:
            k = iv.hi - iv.lo
            starts = np.arange(2 ** (iv.lo - 1) - 1, 2**iv.lo - 1, dtype=np.int64)
            targets = (((starts[:, None] + 1) << k) - 1 + np.arange(1 << k, dtype=np.int64)).ravel()
            src0 = np.repeat(_node_role_ids(starts, Role.K0), 1 << k)
            src1 = np.repeat(_node_role_ids(starts, Role.K1), 1 << k)
            tbase = 3 + 7 * (targets - 1)
            emit(src0, tbase + Role.X1, EdgeKind.RIB)
            emit(src0, tbase + Role.X2, EdgeKind.RIB)
            emit(src1, tbase + Role.Y1, EdgeKind.RIB)
            emit(src1, tbase + Role.Y2, EdgeKind.RIB)

    eu = np.concatenate(chunks_u)
    ev = np.concatenate(chunks_v)
    ek = np.concatenate(chunks_k)
    return LabeledGraph.from_edges(
        num_vertices, (eu, ev, ek), ell=ell, tree_depth=tree_depth
    )


def blow_up(tree: Tree) -> LabeledGraph:
    """Blow up a complete binary tree: triangles plus subdivision paths."""
    return _build(tree.depth, None, None)


def build_ribbed_graph(ell: int, max_ell: int = DEFAULT_MAX_ELL) -> LabeledGraph:
    """Blow up the depth-span(ell) tree and add all interval ribs.

    Refuses ell > max_ell before allocating anything: the tree depth doubles
    with each increment of ell, so the vertex count is doubly exponential.
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    if ell > max_ell:
        raise ResourceLimitError(
            f"ell={ell} needs a tree of depth {span(ell)} "
            f"(~{2 ** span(ell):.2e} nodes); raise max_ell to force the build"
        )
    return _build(span(ell), build_intervals(ell), ell)


def comparable_nodes(a: int, b: int) -> bool:
    """True iff one tree node is an ancestor of the other."""
    return is_ancestor(a, b) or is_ancestor(b, a)

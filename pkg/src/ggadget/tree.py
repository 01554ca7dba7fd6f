"""Complete binary tree addressed by level-order index.

The root has index 0 and depth 1; the children of node m are 2m+1 and 2m+2.
Nothing is materialized: all queries are index arithmetic, so trees with
hundreds of thousands of nodes cost nothing to "create".
"""

from __future__ import annotations

from dataclasses import dataclass

ROOT = 0


def depth_of(index: int) -> int:
    """Depth of a node: number of nodes on its path to the root."""
    if index < 0:
        raise ValueError(f"node index must be >= 0, got {index}")
    return (index + 1).bit_length()


def parent(index: int) -> int | None:
    """Parent index, or None for the root."""
    if index < 0:
        raise ValueError(f"node index must be >= 0, got {index}")
    if index == ROOT:
        return None
    return (index - 1) // 2


def is_ancestor(s: int, t: int) -> bool:
    """True iff s lies on the path from t to the root (reflexive)."""
    ds, dt = depth_of(s), depth_of(t)
    return ds <= dt and (t + 1) >> (dt - ds) == s + 1


@dataclass(frozen=True)
class Tree:
    """Complete binary tree of a given maximum depth (root depth is 1)."""

    depth: int

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError(f"tree depth must be >= 1, got {self.depth}")

    def node_count(self) -> int:
        return 2**self.depth - 1

    def contains(self, index: int) -> bool:
        return 0 <= index < self.node_count()

    def _check(self, index: int) -> None:
        if not self.contains(index):
            raise ValueError(f"node {index} outside tree of depth {self.depth}")

    def children(self, index: int) -> list[int]:
        """The two children, or [] for a leaf."""
        self._check(index)
        if depth_of(index) == self.depth:
            return []
        return [2 * index + 1, 2 * index + 2]

    def descendants_at_depth(self, index: int, depth: int) -> list[int]:
        """Descendants of ``index`` at the given absolute depth, ascending.

        There are exactly 2**(depth - depth_of(index)) of them.
        """
        self._check(index)
        d0 = depth_of(index)
        if not d0 <= depth <= self.depth:
            raise ValueError(
                f"target depth {depth} outside [{d0}, {self.depth}] for node {index}"
            )
        k = depth - d0
        first = ((index + 1) << k) - 1
        return list(range(first, first + (1 << k)))

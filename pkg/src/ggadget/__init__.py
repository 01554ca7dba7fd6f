"""Builder and verifier for ribbed blow-ups of complete binary trees.

The construction turns a complete binary tree into a 2-degenerate graph
with a Hamiltonian path by replacing nodes with triangles and edges with
subdivision paths, then adds ribs along a nested system of depth intervals.
The package builds these graphs at scale and mechanically certifies their
headline properties: Hamiltonicity, degeneracy exactly 2, coloring numbers
at most 2r + 8, and short induced paths at searchable sizes.
"""

from .analysis import (
    SearchOutcome,
    degeneracy,
    hamiltonian_path,
    heuristic_long_induced_path,
    is_induced_path,
    longest_induced_path,
    q_special_sources,
    sources,
    tau,
    verify_hamiltonian,
)
from .coloring import Ordering, canonical_sigma, check_linear_bound, col_r_value, r_reachable
from .construction import (
    DEFAULT_MAX_ELL,
    EdgeKind,
    LabeledGraph,
    ResourceLimitError,
    Role,
    Vertex,
    blow_up,
    build_ribbed_graph,
)
from .intervals import (
    Interval,
    IntervalSystem,
    build_intervals,
    intervals_with_lo,
    shift,
    span,
    validate,
)
from .tree import Tree, depth_of, is_ancestor, parent

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_ELL",
    "EdgeKind",
    "Interval",
    "IntervalSystem",
    "LabeledGraph",
    "Ordering",
    "ResourceLimitError",
    "Role",
    "SearchOutcome",
    "Tree",
    "Vertex",
    "blow_up",
    "build_intervals",
    "build_ribbed_graph",
    "canonical_sigma",
    "check_linear_bound",
    "col_r_value",
    "degeneracy",
    "depth_of",
    "hamiltonian_path",
    "heuristic_long_induced_path",
    "intervals_with_lo",
    "is_ancestor",
    "is_induced_path",
    "longest_induced_path",
    "parent",
    "q_special_sources",
    "r_reachable",
    "shift",
    "sources",
    "span",
    "tau",
    "validate",
    "verify_hamiltonian",
]

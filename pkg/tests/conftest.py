from __future__ import annotations

import pytest

from ggadget.construction import EdgeKind, LabeledGraph, build_ribbed_graph


@pytest.fixture(scope="session")
def g1() -> LabeledGraph:
    return build_ribbed_graph(1)


@pytest.fixture(scope="session")
def g2() -> LabeledGraph:
    return build_ribbed_graph(2)


def make_triangle() -> LabeledGraph:
    edges = [(0, 1, EdgeKind.CLIQUE), (0, 2, EdgeKind.CLIQUE), (1, 2, EdgeKind.CLIQUE)]
    return LabeledGraph.from_edges(3, edges)


def make_path_graph(n: int) -> LabeledGraph:
    edges = [(i, i + 1, EdgeKind.TREE) for i in range(n - 1)]
    return LabeledGraph.from_edges(n, edges)


@pytest.fixture
def triangle() -> LabeledGraph:
    return make_triangle()

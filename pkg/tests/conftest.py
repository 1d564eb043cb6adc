from __future__ import annotations

import pytest

from bicrit.marathe import example1_graph, example2_graph
from bicrit.problems import BiweightedGraph


@pytest.fixture
def ex1():
    """Triangle with tree images (4,2), (2,4), (4,4)."""
    return example1_graph()


@pytest.fixture
def ex2():
    """Triangle with tree images (4,2), (3,3), (3,3)."""
    return example2_graph()


@pytest.fixture
def single_edge():
    return BiweightedGraph(2, [(0, 1, (3, 7))], kind="mst")


@pytest.fixture
def boundary_fixture():
    """Two nodes, three parallel edges with images (1,0), (0,1), (1,1)."""
    return BiweightedGraph(
        2,
        [(0, 1, (1, 0)), (0, 1, (0, 1)), (0, 1, (1, 1))],
        kind="mst",
        relaxed=True,
    )

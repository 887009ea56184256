import pytest

from forcing_lab.graph import Graph, complete_bipartite, complete_graph, cycle_graph, theta_graph


def two_triangles_bridge() -> Graph:
    # a1=1, a2=2, a3=3 ; b1=4, b2=5, b3=6 ; bridge a1b1
    return Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4)])


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture
def theta333():
    return theta_graph(3, 3, 3)

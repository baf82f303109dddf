import pytest

from groupcolor.graphs import EdgeSet, enumerate_poset


@pytest.fixture(scope="session")
def p3():
    return enumerate_poset(3)


@pytest.fixture(scope="session")
def p4():
    return enumerate_poset(4)


@pytest.fixture(scope="session")
def p5():
    return enumerate_poset(5)


@pytest.fixture(scope="session")
def k3_v3():
    return EdgeSet.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture(scope="session")
def c4_v4():
    return EdgeSet.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture(scope="session")
def k4_v4():
    return EdgeSet.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])

import pytest

from homkit.graph import complete_graph, cycle_graph, empty_graph, path_graph


@pytest.fixture
def p3():
    return path_graph(3, ['a', 'b', 'c'])


@pytest.fixture
def k2():
    return complete_graph(2, ['u', 'v'])


@pytest.fixture
def k3():
    return complete_graph(3, ['1', '2', '3'])


@pytest.fixture
def c5():
    return cycle_graph(5, ['1', '2', '3', '4', '5'])


@pytest.fixture
def c4():
    return cycle_graph(4, ['a', 'b', 'c', 'd'])


@pytest.fixture
def k1():
    return empty_graph(1, ['a'])

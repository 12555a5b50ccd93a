import pytest

from meansombor.graphs import (
    complete_graph,
    path_graph,
    star_graph,
)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k13():
    return star_graph(3)

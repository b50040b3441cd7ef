import pytest

from edgedepth.graphs import Graph


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)


@pytest.fixture
def k2():
    return Graph.from_edges(2, [(1, 2)])


@pytest.fixture
def triangle():
    return Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def c5():
    return Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])


@pytest.fixture
def fig1():
    """Triangle 1-2-3 with a path 3-4-5-6-7 attached (s = 4)."""
    return Graph.from_edges(
        7, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7)]
    )


@pytest.fixture
def fig2():
    """Triangle 1-2-3, vertex 4 adjacent to 1,2,3,5."""
    return Graph.from_edges(
        5, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 4), (3, 4), (4, 5)]
    )


@pytest.fixture
def fig3():
    """Triangle 1-2-3 with edges 3-4, 4-5, 4-6."""
    return Graph.from_edges(6, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (4, 6)])

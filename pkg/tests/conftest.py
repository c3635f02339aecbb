import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from brooks_color.generate import cycle_graph, petersen_graph
from brooks_color.graph import Graph, from_edge_list

FIXTURES = Path(__file__).parent / "fixtures"

# acceptance criteria append "PASS/FAIL ..." lines here
CRITERIA_LINES: list[str] = []


def complete(n: int) -> Graph:
    return from_edge_list(n, itertools.combinations(range(n), 2))


def k4_minus(u: int, v: int) -> Graph:
    return from_edge_list(4, [e for e in itertools.combinations(range(4), 2) if e != (u, v)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def petersen():
    return petersen_graph()


@st.composite
def graphs(draw, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, mask) if keep])


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA_LINES:
            terminalreporter.write_line(line)

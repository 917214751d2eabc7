import random

import pytest
from hypothesis import strategies as st

from distspec.graph_core import Graph, is_connected

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])
    if connected and not is_connected(g):
        # add a spanning path so the draw stays cheap
        g = Graph.from_edges(n, g.edges() + [(i, i + 1) for i in range(n - 1)])
    return g


def random_connected(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    while True:
        g = Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])
        if is_connected(g):
            return g


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import random

import pytest
from hypothesis import strategies as st

from ordtile.catalog import pattern
from ordtile.core import OrderedGraph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> OrderedGraph:
    return OrderedGraph.from_edges(
        n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    )


@st.composite
def ordered_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return OrderedGraph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@pytest.fixture
def pat():
    return pattern


# criterion id -> (passed, elapsed seconds, limit seconds, note); filled by test_acceptance
ACCEPTANCE_RESULTS: dict[str, tuple[bool, float, float, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE_RESULTS, key=lambda c: int(c.split(".")[0])):
        ok, elapsed, limit, note = ACCEPTANCE_RESULTS[cid]
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'}  {cid:<38} {elapsed:8.3f}s (limit {limit:g}s)  {note}"
        )

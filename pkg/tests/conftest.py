import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from annihilator.graph import build_graph

DATA = Path(__file__).parent / "data"


def random_graph(rng: random.Random, n: int, p: float):
    return build_graph(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


def random_graphs(count: int, max_n: int, seed: int):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(0, max_n)
        yield random_graph(rng, n, rng.choice([0.1, 0.2, 0.35, 0.5, 0.7]))


def data_lines(name: str) -> list[str]:
    return (DATA / name).read_text().splitlines()


@st.composite
def graphs(draw, max_n: int = 12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@pytest.fixture(scope="session")
def small_graphs():
    from annihilator.formats import parse_graph6

    return [parse_graph6(s) for s in data_lines("graphs_n1_8.g6")]


@pytest.fixture(scope="session")
def small_bipartite():
    from annihilator.formats import parse_graph6

    return [parse_graph6(s) for s in data_lines("bipartite_n1_8.g6")]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

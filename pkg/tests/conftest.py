import random

import pytest
from hypothesis import strategies as st

from shannon_game.graph import Graph


def random_graph(rng: random.Random, n: int, p: float = 0.4, terminals=(0, 1)) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges, terminals)


@st.composite
def graphs(draw, min_n=3, max_n=7, terminals=True):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    return Graph.from_edges(n, edges, (0, 1) if terminals else ())


@pytest.fixture
def rng():
    return random.Random(1234)

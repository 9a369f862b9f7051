import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from rainbow2.generators import complete, cycle, path, petersen, wheel
from rainbow2.graph import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    pairs = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return build_graph(n, pairs)


def random_connected(rng, n_lo, n_hi, p_lo=0.2, p_hi=0.95, max_m=None):
    """Draw G(n, p) until connected (and within an edge budget if given)."""
    while True:
        n = int(rng.integers(n_lo, n_hi + 1))
        g = random_graph(rng, n, float(rng.uniform(p_lo, p_hi)))
        if nx.is_connected(to_nx(g)) and (max_m is None or g.m <= max_m):
            return g


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # thread a random spanning path so the graph is connected
        order = draw(st.permutations(range(n)))
        chosen = chosen + list(zip(order, order[1:]))
    return build_graph(n, chosen)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def w5():
    return wheel(5)


@pytest.fixture
def w5_pendant():
    g = wheel(5)
    return build_graph(7, list(g.edges) + [(0, 6)])


@pytest.fixture
def pete():
    return petersen()

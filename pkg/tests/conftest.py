import itertools
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kproper.graph import from_edge_list

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, b in zip(pairs, keep) if b]
    if connected:
        for v in range(1, n):
            edges.append((draw(st.integers(0, v - 1)), v))
    return from_edge_list(edges, n=n)


def all_graphs(n):
    """Every labelled graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edge_list([e for i, e in enumerate(pairs) if mask >> i & 1], n=n)


def random_graph(rng, n, p):
    return from_edge_list(
        [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p], n=n
    )


@pytest.fixture
def rng():
    return random.Random(20261014)

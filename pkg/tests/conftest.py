import hypothesis.strategies as st
import pytest
from hypothesis import settings

from pmatch.graph import Graph, from_edge_mask, generate
from pmatch.properties import Matching

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << pairs) - 1))
    return from_edge_mask(n, mask)


@st.composite
def graph_with_matching(draw, min_n=2, max_n=8):
    G = draw(graphs(min_n, max_n))
    chosen = []
    sat = set()
    for e in G.edges:
        if draw(st.booleans()) and not (set(e) & sat):
            chosen.append(e)
            sat.update(e)
    return G, Matching(G, chosen)


@pytest.fixture
def p8():
    return generate("path", n=8)


@pytest.fixture
def c4():
    return generate("cycle", n=4)


@pytest.fixture
def c5():
    return generate("cycle", n=5)


@pytest.fixture
def c6():
    return generate("cycle", n=6)


@pytest.fixture
def k4():
    return generate("complete", n=4)


@pytest.fixture
def q3():
    return generate("hypercube", n=3)


def brute_force_max_matching(G: Graph) -> int:
    """Test-side reference: largest pairwise-disjoint edge set by plain
    recursion, independent of the package's algorithms."""

    edges = G.edges

    def rec(i, sat):
        if i == len(edges):
            return 0
        best = rec(i + 1, sat)
        u, v = edges[i]
        if not (sat & (1 << u)) and not (sat & (1 << v)):
            best = max(best, 1 + rec(i + 1, sat | (1 << u) | (1 << v)))
        return best

    return rec(0, 0)

import pytest
from hypothesis import given
import hypothesis.strategies as st

from pmatch.graph import Graph, generate, is_bipartite
from pmatch.matching import (
    bipartite_matching_and_cover,
    hall_violator,
    hopcroft_karp,
    lexmin_maximum_matching,
    max_matching_size,
    maximum_matching,
)
from pmatch.properties import is_matching
from pmatch.theorems import all_graphs

from conftest import brute_force_max_matching, graphs


def test_blossom_exhaustive_small():
    for n in range(0, 6):
        for G in all_graphs(n):
            got = maximum_matching(G)
            assert is_matching(G, got)
            assert len(got) == brute_force_max_matching(G)


@given(graphs(max_n=8))
def test_blossom_matches_brute_force(G):
    got = maximum_matching(G)
    assert is_matching(G, got)
    assert len(got) == brute_force_max_matching(G)


def test_blossom_known_values():
    assert max_matching_size(generate("cycle", n=5)) == 2
    assert max_matching_size(generate("cycle", n=7)) == 3
    assert max_matching_size(generate("complete", n=4)) == 2
    assert max_matching_size(generate("hypercube", n=3)) == 4
    # the Petersen graph has a perfect matching
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    petersen = Graph(10, tuple(outer + inner + spokes))
    assert max_matching_size(petersen) == 5
    # odd-cycle chains force blossom contractions
    bowtie = Graph(5, ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)))
    assert max_matching_size(bowtie) == 2


def test_lexmin_maximum_matching(p8):
    assert lexmin_maximum_matching(p8) == ((0, 1), (2, 3), (4, 5), (6, 7))


@given(graphs(min_n=1, max_n=6))
def test_lexmin_is_smallest_optimum(G):
    got = lexmin_maximum_matching(G)
    best = brute_force_max_matching(G)
    assert len(got) == best
    # enumerate all maximum matchings and compare
    edges = G.edges
    optima = []

    def rec(i, cur, sat):
        if len(cur) == best:
            optima.append(tuple(cur))
            return
        if i == len(edges):
            return
        rec(i + 1, cur, sat)
        u, v = edges[i]
        if not (sat & ((1 << u) | (1 << v))):
            cur.append(edges[i])
            rec(i + 1, cur, sat | (1 << u) | (1 << v))
            cur.pop()

    rec(0, [], 0)
    assert got == min(optima)


def test_hopcroft_karp_simple():
    size, ml, mr = hopcroft_karp(3, 3, [[0, 1], [0], [2]])
    assert size == 3
    size, ml, mr = hopcroft_karp(2, 1, [[0], [0]])
    assert size == 1
    violator = hall_violator(2, [[0], [0]], ml, mr)
    assert len(violator) == 2  # both left vertices pool one neighbor


def _random_bipartite(data):
    a = data.draw(st.integers(1, 5))
    b = data.draw(st.integers(1, 5))
    mask = data.draw(st.integers(0, (1 << (a * b)) - 1))
    edges = []
    for i in range(a):
        for j in range(b):
            if mask >> (i * b + j) & 1:
                edges.append((i, a + j))
    return Graph(a + b, tuple(edges))


@given(st.data())
def test_bipartite_cover_certifies_duality(data):
    G = _random_bipartite(data)
    matching, cover = bipartite_matching_and_cover(G)
    assert is_matching(G, matching)
    assert len(matching) == len(cover) == brute_force_max_matching(G)
    assert all(u in cover or v in cover for u, v in G.edges)


def test_cover_requires_bipartite():
    with pytest.raises(ValueError):
        bipartite_matching_and_cover(generate("cycle", n=5))


@given(graphs(max_n=8))
def test_blossom_agrees_with_bipartite_route_when_bipartite(G):
    if is_bipartite(G) is None:
        return
    matching, _ = bipartite_matching_and_cover(G)
    assert len(matching) == max_matching_size(G)

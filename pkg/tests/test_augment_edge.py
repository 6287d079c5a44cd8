import random

import pytest
from hypothesis import given, settings, strategies as st

from cographs.augment_edge import (
    augment_edge,
    augment_edge_weighted,
    edge_connectivity,
    low_degree_complement,
    max_matching,
    min_edge_cover,
    min_weighted_edge_cover,
)
from cographs.cotree import JOIN, random_cograph, realize
from cographs.errors import CompleteGraph, IsolatedVertex
from cographs.graph import Graph, WeightMap
from cographs.oracle import (
    brute_connectivity,
    brute_max_matching,
    brute_min_augmentation,
    brute_min_edge_cover,
)

from conftest import C4, K4, STAR, graph


def test_edge_connectivity_examples():
    assert [edge_connectivity(g) for g in (C4, STAR, K4)] == [2, 1, 3]


def test_edge_cover_examples():
    assert min_edge_cover(graph(2, (0, 1))).edges == ((0, 1),)
    assert len(min_edge_cover(Graph.complete(3))) == 2
    assert len(min_edge_cover(graph(4, (0, 1), (2, 3)))) == 2
    with pytest.raises(IsolatedVertex):
        min_edge_cover(graph(3, (0, 1)))


def test_weighted_cover_examples():
    assert min_weighted_edge_cover(graph(2, (0, 1)), WeightMap({(0, 1): 7})).total_weight == 7
    p3 = graph(3, (0, 1), (1, 2))
    assert min_weighted_edge_cover(p3, WeightMap({(0, 1): 1, (1, 2): 1})).edges == ((0, 1), (1, 2))
    tri = WeightMap({(0, 1): 1, (1, 2): 1, (0, 2): 10})
    cover = min_weighted_edge_cover(Graph.complete(3), tri)
    assert cover.edges == ((0, 1), (1, 2)) and cover.total_weight == 2


def test_matching_examples():
    assert max_matching(Graph(3, (frozenset(),) * 3)) == set()
    assert len(max_matching(C4)) == 2


def test_augment_examples():
    aug, h = augment_edge(C4)
    assert aug.edges == ((0, 2), (1, 3)) and h == K4
    aug, h = augment_edge(STAR)
    assert len(aug) == 2 and h.min_degree() == 2 and brute_connectivity(h, "edge") == 2
    # u=0 universal, edge ab = 12, c = 3
    g = graph(4, (0, 1), (0, 2), (0, 3), (1, 2))
    aug, h = augment_edge(g)
    assert aug.edges == ((1, 3),)
    assert brute_connectivity(h, "edge") == 2
    with pytest.raises(CompleteGraph):
        augment_edge(K4)


def test_weighted_augment_examples():
    aug, _ = augment_edge_weighted(C4, WeightMap({(0, 2): 3, (1, 3): 4}))
    assert aug.edges == ((0, 2), (1, 3)) and aug.total_weight == 7
    aug, _ = augment_edge_weighted(STAR, WeightMap({(1, 2): 1, (2, 3): 1, (1, 3): 10}))
    assert aug.total_weight == 2


def _connected_non_complete(n, seed):
    g = realize(random_cograph(n, seed, root_label=JOIN))
    return None if g.is_complete() else g


@given(st.integers(2, 8), st.integers(0, 10**6))
def test_matching_and_cover_sizes(n, seed):
    g = realize(random_cograph(n, seed))
    assert len(max_matching(g)) == brute_max_matching(g)
    if g.min_degree() > 0:
        cover = min_edge_cover(g)
        assert len(cover) == brute_min_edge_cover(g) == n - brute_max_matching(g)
        assert {v for e in cover.edges for v in e} == set(range(n))


@given(st.integers(3, 12), st.integers(0, 10**6))
def test_augment_edge_counts(n, seed):
    g = _connected_non_complete(n, seed)
    if g is None:
        return
    k = g.min_degree()
    aug, h = augment_edge(g)
    x, comp = low_degree_complement(g)
    assert h.min_degree() == k + 1
    assert len(aug) == len(x) - len(max_matching(comp))
    uniform, _ = augment_edge_weighted(g, WeightMap.uniform(g.non_edges()))
    assert len(uniform) == len(aug)


@settings(max_examples=40)
@given(st.integers(3, 6), st.integers(0, 10**6))
def test_augment_edge_weighted_brute(n, seed):
    g = _connected_non_complete(n, seed)
    if g is None:
        return
    rng = random.Random(seed)
    w = WeightMap({e: rng.randint(1, 9) for e in g.non_edges()})
    aug, h = augment_edge_weighted(g, w)
    cost, _ = brute_min_augmentation(g, "edge", False, w)
    assert aug.total_weight == cost
    assert brute_connectivity(h, "edge") >= g.min_degree() + 1

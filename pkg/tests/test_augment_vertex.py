import pytest
from hypothesis import given, settings, strategies as st

from cographs.augment_vertex import augment_vertex, augment_vertex_weighted, vertex_connectivity
from cographs.cotree import JOIN, decompose, random_cograph, realize
from cographs.errors import CompleteGraph, InputError, MissingWeight
from cographs.graph import WeightMap
from cographs.oracle import brute_connectivity, brute_min_augmentation

from conftest import C4, K4, STAR


def test_star_and_c4():
    aug, h = augment_vertex(STAR, decompose(STAR))
    assert len(aug) == 2 and brute_connectivity(h, "vertex") == 2
    aug, h = augment_vertex(C4, decompose(C4))
    assert aug.edges == ((0, 2), (1, 3))
    assert h == K4


def test_complete_and_bad_k():
    with pytest.raises(CompleteGraph):
        augment_vertex(K4, decompose(K4))
    with pytest.raises(InputError):
        augment_vertex(C4, decompose(C4), k=1)
    assert augment_vertex(C4, decompose(C4), k=2)[0].edges == ((0, 2), (1, 3))


def test_weighted_examples():
    w = WeightMap({(1, 2): 1, (1, 3): 2, (2, 3): 10})
    aug, _ = augment_vertex_weighted(STAR, decompose(STAR), w)
    assert aug.edges == ((1, 2), (1, 3)) and aug.total_weight == 3
    aug, _ = augment_vertex_weighted(C4, decompose(C4), WeightMap({(0, 2): 5, (1, 3): 1}))
    assert aug.edges == ((0, 2), (1, 3)) and aug.total_weight == 6
    with pytest.raises(MissingWeight):
        augment_vertex_weighted(C4, decompose(C4), WeightMap({(0, 2): 5}))


def _non_complete(n, seed):
    t = random_cograph(n, seed, root_label=JOIN)
    g = realize(t)
    return (t, g) if not g.is_complete() else (None, None)


@given(st.integers(3, 30), st.integers(0, 10**6))
def test_unweighted_result_is_cograph_one_more_connected(n, seed):
    t, g = _non_complete(n, seed)
    if t is None:
        return
    aug, h = augment_vertex(g, t)
    k = vertex_connectivity(g, t)
    assert vertex_connectivity(h, decompose(h)) == k + 1
    # each chosen vertex sees everyone afterwards
    assert all(h.degree(x) == h.n - 1 for x in aug.chosen)
    uniform, _ = augment_vertex_weighted(g, t, WeightMap.uniform(g.non_edges()))
    assert uniform.edges == aug.edges


@settings(max_examples=40)
@given(st.integers(3, 6), st.integers(0, 10**6), st.integers(1, 5))
def test_weighted_matches_brute_force_and_scales(n, seed, factor):
    t, g = _non_complete(n, seed)
    if t is None:
        return
    import random

    rng = random.Random(seed)
    w = WeightMap({e: rng.randint(1, 9) for e in g.non_edges()})
    aug, h = augment_vertex_weighted(g, t, w)
    cost, _ = brute_min_augmentation(g, "vertex", True, w)
    assert aug.total_weight == cost
    assert brute_connectivity(h, "vertex") >= brute_connectivity(g, "vertex") + 1
    scaled, _ = augment_vertex_weighted(g, t, w.scaled(factor))
    assert scaled.edges == aug.edges

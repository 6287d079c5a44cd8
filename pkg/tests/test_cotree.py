import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cographs.cotree import (
    JOIN,
    UNION,
    Cotree,
    Internal,
    Leaf,
    binarize,
    decompose,
    enumerate_cotrees,
    is_canonical,
    leaves,
    postorder,
    random_cograph,
    realize,
)
from cographs.errors import NotCograph
from cographs.graph import Graph
from cographs.oracle import has_induced_p4

from conftest import C4, P4


def test_decompose_examples():
    with pytest.raises(NotCograph):
        decompose(P4)
    assert decompose(Graph(1, (frozenset(),))).root == Leaf(0)
    t = decompose(C4)
    assert t.root == Internal(JOIN, (Internal(UNION, (Leaf(0), Leaf(2))), Internal(UNION, (Leaf(1), Leaf(3)))))
    assert realize(t) == C4


def test_realize_examples():
    assert realize(Cotree(Leaf(0))).n == 1
    k3 = Cotree(Internal(JOIN, (Leaf(0), Leaf(1), Leaf(2))))
    assert realize(k3) == Graph.complete(3)


def test_binarize_left_deep():
    k3 = Cotree(Internal(JOIN, (Leaf(0), Leaf(1), Leaf(2))))
    pt = binarize(k3)
    assert pt.root == Internal(JOIN, (Internal(JOIN, (Leaf(0), Leaf(1))), Leaf(2)))
    assert realize(pt) == Graph.complete(3)
    two = Cotree(Internal(UNION, (Leaf(0), Leaf(1))))
    assert binarize(two).root == two.root


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 10), (5, 24), (6, 66), (7, 180), (8, 522)])
def test_enumeration_counts(n, count):
    trees = list(enumerate_cotrees(n))
    assert len(trees) == count
    assert len({realize(t) for t in trees}) == count


def test_enumeration_is_all_unlabelled_cographs_on_four_vertices():
    # 11 graphs on 4 vertices up to isomorphism; only P4 is not a cograph
    seen = set()
    pairs = list(itertools.combinations(range(4), 2))
    for mask in range(1 << 6):
        g = Graph.from_edges(4, [p for i, p in enumerate(pairs) if mask >> i & 1])
        key = min(
            tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
            for perm in itertools.permutations(range(4))
        )
        seen.add((key, has_induced_p4(g)))
    assert len(seen) == 11
    assert sum(1 for _, p4 in seen if not p4) == 10


def test_round_trip_up_to_eight():
    for n in range(1, 9):
        for t in enumerate_cotrees(n):
            assert is_canonical(t)
            assert decompose(realize(t)) == t


def _cross_pairs_ok(t) -> bool:
    g = realize(t)
    for x in postorder(t.root):
        if x.is_leaf:
            continue
        parts = [leaves(c) for c in x.children]
        for a, b in itertools.combinations(parts, 2):
            for u in a:
                for v in b:
                    if g.has_edge(u, v) != (x.label == JOIN):
                        return False
    return True


@given(st.integers(1, 12), st.integers(0, 10**6))
def test_random_cograph_properties(n, seed):
    t = random_cograph(n, seed)
    assert t == random_cograph(n, seed)
    assert sorted(leaves(t.root)) == list(range(n))
    assert is_canonical(t)
    assert _cross_pairs_ok(t)
    g = realize(t)
    assert decompose(g) == t
    assert realize(binarize(decompose(g))) == g


@settings(max_examples=60)
@given(st.integers(4, 7).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))))
def test_recognition_matches_quadruple_scan(data):
    n, bits = data
    pairs = list(itertools.combinations(range(n), 2))
    g = Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])
    try:
        decompose(g)
        recognised = True
    except NotCograph:
        recognised = False
    assert recognised != has_induced_p4(g)


def test_large_random_cograph_has_no_p4_on_samples():
    t = random_cograph(1000, 42)
    g = realize(t)
    import random

    rng = random.Random(0)
    for _ in range(200):
        sub = rng.sample(range(1000), 12)
        h = Graph.from_edges(12, [(i, j) for i, j in itertools.combinations(range(12), 2) if g.has_edge(sub[i], sub[j])])
        assert not has_induced_p4(h)

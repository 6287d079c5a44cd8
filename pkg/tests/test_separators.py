import pytest
from hypothesis import given

from cographs.cotree import Cotree, Leaf, decompose
from cographs.errors import Disconnected
from cographs.graph import Graph, connected_components
from cographs.oracle import (
    brute_connectivity,
    brute_min_connected_separator,
    brute_min_stable_separator,
    brute_minimal_separators,
)
from cographs.separators import (
    min_connected_vertex_separator,
    min_stable_vertex_separator,
    minimal_vertex_separators,
    minimum_vertex_separators,
    separators_from_cotree,
    vertex_connectivity_from_cotree,
)

from conftest import C4, K4, OCTAHEDRON, P3, STAR, connected_cographs


def _sets(seps):
    return {s.vertices for s in seps}


def test_minimal_separator_examples():
    assert [s.sorted() for s in minimal_vertex_separators(C4, decompose(C4))] == [[1, 3], [0, 2]]
    assert minimal_vertex_separators(K4, decompose(K4)) == []
    assert _sets(minimal_vertex_separators(STAR, decompose(STAR))) == {frozenset({0})}


def test_connectivity_examples():
    assert [vertex_connectivity_from_cotree(decompose(g)) for g in (K4, C4, STAR)] == [3, 2, 1]
    assert vertex_connectivity_from_cotree(Cotree(Leaf(0))) == 0
    assert separators_from_cotree(Cotree(Leaf(0))) == []


def test_disconnected_rejected():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(Disconnected):
        minimal_vertex_separators(g, decompose(g))


def test_connected_separator_examples():
    assert min_connected_vertex_separator(P3, decompose(P3)).sorted() == [0]
    assert min_connected_vertex_separator(C4, decompose(C4)) is None
    s = min_connected_vertex_separator(OCTAHEDRON, decompose(OCTAHEDRON))
    assert len(s) == 4
    assert len(connected_components(OCTAHEDRON, s.vertices)) == 1


def test_stable_separator_examples():
    assert min_stable_vertex_separator(C4, decompose(C4)).sorted() == [0, 2]
    assert min_stable_vertex_separator(STAR, decompose(STAR)).sorted() == [0]
    assert min_stable_vertex_separator(OCTAHEDRON, decompose(OCTAHEDRON)) is None


@given(connected_cographs(min_n=2, max_n=9))
def test_minimal_separators_match_brute_force(data):
    t, g, _ = data
    seps = minimal_vertex_separators(g, t)
    assert _sets(seps) == set(brute_minimal_separators(g))
    assert len(seps) == len(_sets(seps))
    k = vertex_connectivity_from_cotree(t)
    assert k == brute_connectivity(g, "vertex")
    assert all(len(s) == k for s in minimum_vertex_separators(g, t))


@given(connected_cographs(min_n=2, max_n=9))
def test_special_separators_match_brute_force(data):
    t, g, _ = data
    for fast, slow in (
        (min_connected_vertex_separator, brute_min_connected_separator),
        (min_stable_vertex_separator, brute_min_stable_separator),
    ):
        got = fast(g, t, return_all=True)
        want = slow(g)
        assert (got is None) == (not want)
        if got is not None:
            assert {s.vertices for s in got} == set(want)

import pytest
from hypothesis import given

from cographs.cotree import binarize, decompose, leaves
from cographs.errors import Disconnected, TooSmall, TreeMismatch
from cographs.graph import Graph
from cographs.longest_path import (
    hamiltonian_cycle_exists,
    hamiltonian_path_exists,
    longest_path,
    path_dp,
)
from cographs.oracle import brute_hamiltonian_cycle, brute_hamiltonian_path, brute_longest_path

from conftest import C4, K4, STAR, connected_cographs, is_path


def pt_of(g):
    return binarize(decompose(g))


def test_longest_path_examples():
    p = longest_path(STAR, pt_of(STAR))
    assert len(p) == 3 and p[1] == 0
    p = longest_path(C4, pt_of(C4))
    assert len(p) == 4 and is_path(C4, p)
    two = Graph(2, (frozenset(), frozenset()))
    assert len(longest_path(two, pt_of(two))) == 1


def test_hamiltonian_examples():
    ok, p = hamiltonian_path_exists(C4, pt_of(C4))
    assert ok and is_path(C4, p) and len(p) == 4
    assert hamiltonian_path_exists(STAR, pt_of(STAR)) == (False, None)
    for n in range(2, 7):
        k = Graph.complete(n)
        assert hamiltonian_path_exists(k, pt_of(k))[0]
    assert hamiltonian_cycle_exists(C4, pt_of(C4))
    assert not hamiltonian_cycle_exists(STAR, pt_of(STAR))
    k3 = Graph.complete(3)
    assert hamiltonian_cycle_exists(k3, pt_of(k3))


def test_errors():
    two = Graph(2, (frozenset(), frozenset()))
    with pytest.raises(Disconnected):
        hamiltonian_path_exists(two, pt_of(two))
    with pytest.raises(TooSmall):
        hamiltonian_cycle_exists(Graph.complete(2), pt_of(Graph.complete(2)))
    with pytest.raises(TreeMismatch):
        longest_path(K4, pt_of(C4))


@given(connected_cographs(min_n=1, max_n=9))
def test_every_node_state_is_a_cover(data):
    _, g, pt = data
    trace = []
    path_dp(pt.root, trace)
    for node, st in trace:
        covered = [v for p in (st.P,) + st.U for v in p]
        assert sorted(covered) == sorted(leaves(node))
        assert all(is_path(g, list(p)) for p in (st.P,) + st.U)
        assert all(len(st.P) >= len(p) for p in st.U)
        assert [len(p) for p in st.U] == sorted((len(p) for p in st.U), reverse=True)


@given(connected_cographs(min_n=1, max_n=8))
def test_matches_brute_force(data):
    _, g, pt = data
    p = longest_path(g, pt)
    assert is_path(g, p)
    assert len(p) == brute_longest_path(g)
    ok, w = hamiltonian_path_exists(g, pt)
    assert ok == brute_hamiltonian_path(g) == (len(p) == g.n)
    if ok:
        assert sorted(w) == list(range(g.n)) and is_path(g, w)
    if g.n >= 3:
        cyc = hamiltonian_cycle_exists(g, pt)
        assert cyc == brute_hamiltonian_cycle(g)
        assert not cyc or ok

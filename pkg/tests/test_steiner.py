import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cographs.cotree import binarize, decompose
from cographs.errors import EmptyTerminals, InputError, TooSmall
from cographs.graph import Graph
from cographs.longest_path import hamiltonian_cycle_exists, hamiltonian_path_exists
from cographs.oracle import brute_steiner_cycle, brute_steiner_path
from cographs.steiner import min_extra_vertices, steiner_cycle_exists, steiner_path, steiner_path_exists

from conftest import C4, STAR, connected_cographs, graph, is_path


def pt_of(g):
    return binarize(decompose(g))


def test_path_examples():
    p = steiner_path(STAR, pt_of(STAR), {1, 3})
    assert p == [1, 0, 3]
    assert min_extra_vertices(STAR, pt_of(STAR), {1, 3}) == 1
    assert steiner_path(C4, pt_of(C4), {2}) == [2]
    assert steiner_path(STAR, pt_of(STAR), {0, 1, 2, 3}) is None
    assert steiner_path_exists(C4, pt_of(C4), {0, 2})
    assert not steiner_path_exists(STAR, pt_of(STAR), {1, 2, 3})
    assert steiner_path_exists(STAR, pt_of(STAR), {3})


def test_cycle_examples():
    assert steiner_cycle_exists(C4, pt_of(C4), {0, 2})
    for ts in ({1, 2}, {1, 3}, {1, 2, 3}):
        assert not steiner_cycle_exists(STAR, pt_of(STAR), ts)
    k3 = Graph.complete(3)
    assert steiner_cycle_exists(k3, pt_of(k3), {0, 1, 2})


def test_input_errors():
    with pytest.raises(EmptyTerminals):
        steiner_path(C4, pt_of(C4), set())
    with pytest.raises(InputError):
        steiner_path(C4, pt_of(C4), {7})
    k2 = Graph.complete(2)
    with pytest.raises(TooSmall):
        steiner_cycle_exists(k2, pt_of(k2), {0})


def test_strict_mode_misses_a_path():
    # z=0 joined to (star with centre y=1, leaves 2,3,4) plus isolated w=5
    g = graph(6, *[(0, v) for v in range(1, 6)], (1, 2), (1, 3), (1, 4))
    pt = pt_of(g)
    ts = {2, 3, 4}
    p = steiner_path(g, pt, ts)
    assert p is not None and len(p) == 5 and is_path(g, p)
    assert steiner_path(g, pt, ts, strict=True) is None
    assert brute_steiner_path(g, ts) == 2


@given(connected_cographs(min_n=1, max_n=7))
def test_all_terminal_sets_match_brute_force(data):
    _, g, pt = data
    for r in range(1, g.n + 1):
        for ts in itertools.combinations(range(g.n), r):
            extra = min_extra_vertices(g, pt, ts)
            assert extra == brute_steiner_path(g, ts)
            p = steiner_path(g, pt, ts)
            if p is None:
                assert extra is None
            else:
                assert is_path(g, p) and set(ts) <= set(p) and len(p) == len(ts) + extra


@settings(max_examples=60)
@given(connected_cographs(min_n=3, max_n=6))
def test_cycles_match_brute_force(data):
    _, g, pt = data
    for r in range(1, g.n + 1):
        for ts in itertools.combinations(range(g.n), r):
            assert steiner_cycle_exists(g, pt, ts) == brute_steiner_cycle(g, ts)


@given(connected_cographs(min_n=3, max_n=8), st.data())
def test_monotone_and_full_set(data, draw):
    _, g, pt = data
    ts = draw.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    sub = draw.draw(st.sets(st.sampled_from(sorted(ts)), min_size=1))
    # fewer terminals can only help
    if steiner_path_exists(g, pt, ts):
        assert steiner_path_exists(g, pt, sub)
    everyone = range(g.n)
    assert steiner_path_exists(g, pt, everyone) == hamiltonian_path_exists(g, pt)[0]
    assert steiner_cycle_exists(g, pt, everyone) == hamiltonian_cycle_exists(g, pt)

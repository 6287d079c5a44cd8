from __future__ import annotations

import pytest
from hypothesis import strategies as st

from cographs.cotree import JOIN, binarize, random_cograph, realize
from cographs.graph import Graph


def graph(n: int, *edges: tuple[int, int]) -> Graph:
    return Graph.from_edges(n, edges)


C4 = graph(4, (0, 1), (1, 2), (2, 3), (0, 3))
K4 = Graph.complete(4)
STAR = graph(4, (0, 1), (0, 2), (0, 3))  # K_{1,3}, centre 0
P3 = graph(3, (0, 1), (0, 2))  # centre 0
P4 = graph(4, (0, 1), (1, 2), (2, 3))
OCTAHEDRON = Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if u // 2 != v // 2])


def is_path(g: Graph, p: list[int]) -> bool:
    return len(set(p)) == len(p) and all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


@st.composite
def connected_cographs(draw, min_n: int = 2, max_n: int = 9):
    """(cotree, graph, parse tree) for a random connected cograph."""
    n = draw(st.integers(min_n, max_n))
    t = random_cograph(n, draw(st.integers(0, 10**6)), root_label=JOIN)
    return t, realize(t), binarize(t)


@pytest.fixture
def c4():
    return C4

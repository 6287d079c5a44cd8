"""Minimum-leaf spanning trees of connected cographs.

Run the longest-path DP on both root children and perform the root join
walk. If the walk is not spanning, it stops at a vertex ``v_k`` of the
second child; the first child's path and every unused leftover path hang
off ``v_k`` as pendant paths, each attached by its first vertex.
A tree with ``pc`` pendant-free path pieces needs at least ``pc + 1``
leaves, and this construction meets that bound.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .cotree import JOIN, ParseTree
from .errors import Disconnected, TooSmall
from .graph import Edge, Graph, canon
from .longest_path import check_tree, join_walk, path_dp


@dataclass(frozen=True)
class SpanningTree:
    edges: tuple[Edge, ...]

    @property
    def n(self) -> int:
        return len(self.edges) + 1


def _path_edges(p: list[int]) -> list[Edge]:
    return [canon(a, b) for a, b in zip(p, p[1:])]


def min_leaf_spanning_tree(g: Graph, pt: ParseTree) -> SpanningTree:
    check_tree(g, pt)
    if g.n < 2:
        raise TooSmall("a spanning tree with leaves needs at least two vertices")
    root = pt.root
    if root.label != JOIN:
        raise Disconnected("graph is disconnected")
    (p1, u1), (p2, u2) = (path_dp(c) for c in root.children)
    if len(u2) > len(u1):
        p1, u1, p2, u2 = p2, u2, p1, u1
    walk, c = join_walk(p1, u1, p2, u2)
    if c is None:
        return SpanningTree(tuple(sorted(_path_edges(walk))))
    if not u1:
        return SpanningTree(tuple(sorted(_path_edges(walk + p1 + p2[:c]))))
    # c == 0: the walk ended on v_k in the second child
    edges = _path_edges(walk)
    hub = walk[-1]
    for piece in [p1] + u1[::-1]:
        edges.append(canon(hub, piece[0]))
        edges += _path_edges(piece)
    return SpanningTree(tuple(sorted(edges)))


def leaf_count(t: SpanningTree) -> int:
    """Number of degree-one vertices (an edge has two)."""
    deg = Counter(v for e in t.edges for v in e)
    return sum(1 for d in deg.values() if d == 1)

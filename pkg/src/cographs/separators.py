"""Minimal, minimum-connected and minimum-stable vertex separators of cographs.

Everything is read off the children of the cotree root: when the graph is
connected the root is a join, and removing every vertex outside one
union-child ``G_i`` (with at least two vertices) leaves ``G_i``, which is
disconnected. Those complements are exactly the minimal separators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cotree import JOIN, UNION, Cotree, Internal, leaves
from .errors import Disconnected, InputError
from .graph import Graph, connected_components

MINIMAL = "minimal"
MINIMUM = "minimum"
CONNECTED = "connected"
STABLE = "stable"


@dataclass(frozen=True)
class SeparatorSet:
    vertices: frozenset[int]
    kind: str

    def sorted(self) -> list[int]:
        return sorted(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


def _root_children(g: Graph | None, t: Cotree) -> tuple[int, list[list[int]]]:
    """Vertex count and sorted leaf lists of the root's children."""
    n = t.vertex_count
    if g is not None and g.n != n:
        raise InputError(f"cotree has {n} leaves but graph has {g.n} vertices")
    root = t.root
    if root.is_leaf:
        return n, [[root.vertex]]
    if root.label != JOIN:
        raise Disconnected("graph is disconnected (cotree root is a union node)")
    return n, [sorted(leaves(c)) for c in root.children]


def separators_from_cotree(t: Cotree) -> list[tuple[int, ...]]:
    """Core on the cotree alone: V minus each non-trivial root child, as vertex tuples."""
    root = t.root
    if root.is_leaf:
        return []
    if root.label != JOIN:
        raise Disconnected("graph is disconnected (cotree root is a union node)")
    parts = [leaves(c) for c in root.children]
    out = []
    for i, c in enumerate(root.children):
        if c.size >= 2:
            out.append(tuple(itertools.chain.from_iterable(p for j, p in enumerate(parts) if j != i)))
    return out


def minimal_vertex_separators(g: Graph, t: Cotree) -> list[SeparatorSet]:
    """All minimal vertex separators, one per root child with >= 2 vertices.

    Returned in canonical root-child order. Empty for complete graphs.
    """
    _root_children(g, t)
    return [SeparatorSet(frozenset(s), MINIMAL) for s in separators_from_cotree(t)]


def vertex_connectivity_from_cotree(t: Cotree) -> int:
    root = t.root
    if root.is_leaf:
        return 0
    if root.label != JOIN:
        raise Disconnected("graph is disconnected (cotree root is a union node)")
    big = [c.size for c in root.children if c.size >= 2]
    return root.size - max(big) if big else root.size - 1


def minimum_vertex_separators(g: Graph, t: Cotree) -> list[SeparatorSet]:
    seps = minimal_vertex_separators(g, t)
    if not seps:
        return []
    k = min(len(s) for s in seps)
    return [SeparatorSet(s.vertices, MINIMUM) for s in seps if len(s) == k]


def _lex_first(cands: list[frozenset[int]]) -> list[frozenset[int]]:
    size = min(len(c) for c in cands)
    return sorted({c for c in cands if len(c) == size}, key=sorted)


def min_connected_vertex_separator(
    g: Graph, t: Cotree, return_all: bool = False
) -> SeparatorSet | list[SeparatorSet] | None:
    """Smallest separator inducing a connected subgraph, or None if there is none.

    Any separator ``S`` leaves ``G - S`` inside a single root child ``C``.
    ``V - C`` is already connected when the root has three or more
    children (two joined blocks) or when the sibling is a single vertex.
    Otherwise one vertex ``x`` of ``C`` must move into the separator, and it
    has to keep ``C - x`` disconnected; with the root of degree two this
    is the cheapest connected separator. Ties resolve to the
    lexicographically smallest sorted vertex list; ``return_all=True`` returns every
    minimum witness.
    """
    n, kids = _root_children(g, t)
    everyone = frozenset(range(n))
    cands: list[frozenset[int]] = []
    for i, c in enumerate(kids):
        if len(c) < 2:
            continue
        sep = everyone.difference(c)
        others = [o for j, o in enumerate(kids) if j != i]
        if len(others) >= 2 or len(others[0]) == 1:
            cands.append(sep)
            continue
        comps = _components_of_child(t.root.children[i])
        for x in c:
            if _splits_after_removal(comps, x):
                cands.append(sep | {x})
    if not cands:
        return None
    best = _lex_first(cands)
    # every candidate is verified against the definition before it is returned
    for s in best:
        if not _is_connected_separator(g, s):
            raise AssertionError(f"internal error: {sorted(s)} is not a connected separator")
    if return_all:
        return [SeparatorSet(s, CONNECTED) for s in best]
    return SeparatorSet(best[0], CONNECTED)


def _components_of_child(node) -> list[frozenset[int]]:
    # root children of a canonical cotree are union nodes (or leaves)
    if node.is_leaf:
        return [frozenset([node.vertex])]
    return [frozenset(leaves(c)) for c in node.children]


def _splits_after_removal(comps: list[frozenset[int]], x: int) -> bool:
    nonempty = sum(1 for c in comps if c - {x})
    return nonempty >= 2


def _is_connected_separator(g: Graph, s: frozenset[int]) -> bool:
    rest = set(range(g.n)) - s
    return (
        len(rest) >= 2
        and len(connected_components(g, rest)) >= 2
        and len(connected_components(g, s)) == 1
    )


def min_stable_vertex_separator(
    g: Graph, t: Cotree, return_all: bool = False
) -> SeparatorSet | list[SeparatorSet] | None:
    """Smallest separator inducing no edge, or None.

    With three or more root children every separator contains two joined
    blocks, so none is stable. With two children ``T1, T2``, ``V(T_i)`` is a
    stable separator when ``T_i`` realizes an edgeless graph (a single leaf or
    a union of leaves) and its sibling is disconnected on >= 2 vertices.
    """
    n, kids = _root_children(g, t)
    if len(kids) != 2:
        return None
    cands = []
    for i in (0, 1):
        node, sib = t.root.children[i], t.root.children[1 - i]
        edgeless = node.is_leaf or (node.label == UNION and all_leaves(node))
        sib_split = not sib.is_leaf and sib.label == UNION
        if edgeless and sib_split:
            cands.append(frozenset(kids[i]))
    if not cands:
        return None
    best = _lex_first(cands)
    if return_all:
        return [SeparatorSet(s, STABLE) for s in best]
    return SeparatorSet(best[0], STABLE)


def all_leaves(node: Internal) -> bool:
    return all(c.is_leaf for c in node.children)

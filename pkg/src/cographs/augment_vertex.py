"""(k+1)-vertex-connectivity augmentation that keeps the graph a cograph.

A connected cograph has vertex connectivity ``n - max|G_i|`` over the
non-trivial root children ``G_i``. Only the children of size exactly
``n - k`` block a higher connectivity, and each must be split. The
unweighted routine moves its cheapest vertex to the root by making it
universal. The weighted routine picks the cheapest split of that child,
which is a minimum cut of its weighted complement; a singleton cut is the
universal-vertex move.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .cotree import JOIN, UNION, Cotree, leaves
from .errors import CompleteGraph, Disconnected, InputError
from .graph import Edge, Graph, WeightMap, canon
from .separators import vertex_connectivity_from_cotree


@dataclass(frozen=True)
class AugmentationSet:
    edges: tuple[Edge, ...]
    total_weight: float = 0
    chosen: tuple[int, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.edges)


def vertex_connectivity(g: Graph, t: Cotree) -> int:
    """Vertex connectivity read from the cotree root (``n - 1`` if complete)."""
    if g.n != t.vertex_count:
        raise InputError("graph and cotree sizes differ")
    if not t.root.is_leaf and t.root.label != JOIN:
        raise Disconnected("graph is disconnected")
    return vertex_connectivity_from_cotree(t)


def _tight_children(t: Cotree):
    root = t.root
    if root.is_leaf:
        raise CompleteGraph("single vertex")
    if root.label != JOIN:
        raise Disconnected("graph is disconnected")
    n = root.size
    k = vertex_connectivity_from_cotree(t)
    if k == n - 1:
        raise CompleteGraph("graph is complete; connectivity is already n-1")
    return k, [c for c in root.children if c.size == n - k]


def _cheapest_vertex(node) -> tuple[int, int, tuple]:
    """Vertex of ``node``'s subtree with the fewest non-neighbours inside it.

    Inside a root child every vertex is adjacent to everything outside it,
    so these counts are the full complement degrees. Each stack entry links
    to its parent's entry, so the winner's ancestor chain comes for free.
    Returns ``(count, vertex, entry)``; ties go to the smallest vertex.
    """
    best: tuple | None = None
    stack = [(node, 0, None)]
    while stack:
        entry = stack.pop()
        x, acc, _ = entry
        if x.is_leaf:
            if best is None or (acc, x.vertex) < best[:2]:
                best = (acc, x.vertex, entry)
            continue
        if x.label == UNION:
            stack.extend((c, acc + x.size - c.size, entry) for c in x.children)
        else:
            stack.extend((c, acc, entry) for c in x.children)
    return best


def _non_neighbors_along(entry: tuple) -> list[int]:
    out: list[int] = []
    cur, _, up = entry
    while up is not None:
        if up[0].label == UNION:
            for c in up[0].children:
                if c is not cur:
                    out.extend(leaves(c))
        cur, _, up = up
    return sorted(out)


def vertex_augmentation_from_cotree(t: Cotree) -> AugmentationSet:
    """Unweighted core working on the cotree alone (no adjacency needed)."""
    _, tight = _tight_children(t)
    edges: list[Edge] = []
    chosen = []
    for child in tight:
        _, x, entry = _cheapest_vertex(child)
        chosen.append(x)
        edges.extend(canon(x, y) for y in _non_neighbors_along(entry))
    return AugmentationSet(tuple(sorted(edges)), 0, tuple(chosen))


def _check_k(t: Cotree, k: int | None) -> None:
    if k is not None and k != vertex_connectivity_from_cotree(t):
        raise InputError(
            f"supplied k={k} disagrees with computed connectivity {vertex_connectivity_from_cotree(t)}"
        )


def augment_vertex(g: Graph, t: Cotree, k: int | None = None) -> tuple[AugmentationSet, Graph]:
    """Raise vertex connectivity by one with the fewest added edges, staying a cograph.

    For each root child of size ``n - k`` the vertex with the fewest
    non-neighbours (smallest index on ties) is joined to all of them.
    """
    if g.n != t.vertex_count:
        raise InputError("graph and cotree sizes differ")
    _check_k(t, k)
    aug = vertex_augmentation_from_cotree(t)
    return aug, g.with_edges(aug.edges)


def augment_vertex_weighted(
    g: Graph,
    t: Cotree,
    w: WeightMap,
    k: int | None = None,
    strict: bool = False,
) -> tuple[AugmentationSet, Graph]:
    """Weighted variant: minimum total weight of added non-edges.

    Each tight root child is split along a minimum cut of its weighted
    complement. The best single-vertex split wins ties, so uniform weights
    reproduce :func:`augment_vertex`. ``strict=True`` restricts the
    search to single-vertex splits (pick ``x`` minimizing the weight of its
    non-edges), which is not always optimal.
    """
    if g.n != t.vertex_count:
        raise InputError("graph and cotree sizes differ")
    _check_k(t, k)
    w.require(g.non_edges())
    _, tight = _tight_children(t)
    edges: list[Edge] = []
    chosen: list[int] = []
    total = 0.0
    for child in tight:
        verts = sorted(leaves(child))
        cost = {x: sum(w.weight(x, y) for y in g.non_neighbors(x)) for x in verts}
        x = min(verts, key=lambda v: (cost[v], v))
        side: set[int] = {x}
        best = cost[x]
        if not strict:
            h = nx.Graph()
            h.add_nodes_from(verts)
            for u in verts:
                for v in g.non_neighbors(u):
                    if u < v:
                        h.add_edge(u, v, weight=w.weight(u, v))
            cut, (part, _) = nx.stoer_wagner(h)
            if cut < best * (1 - 1e-12):
                side, best = set(part), cut
            else:
                chosen.append(x)
        else:
            chosen.append(x)
        for u in sorted(side):
            for v in g.non_neighbors(u):
                if v not in side:
                    edges.append(canon(u, v))
        total += best
    edges = sorted(set(edges))
    total = sum(w.weight(u, v) for u, v in edges)
    aug = AugmentationSet(tuple(edges), total, tuple(chosen))
    return aug, g.with_edges(aug.edges)

"""(k+1)-edge-connectivity augmentation via edge covers of the low-degree vertices.

Edge connectivity of a connected cograph equals its minimum degree, and
that stays true after adding edges (diameter never exceeds two). So the
task is to raise the degree of every minimum-degree vertex ``X``. The
result is generally not a cograph.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .augment_vertex import AugmentationSet
from .cotree import decompose
from .errors import CompleteGraph, Disconnected, InstanceTooLarge, IsolatedVertex
from .graph import Edge, Graph, WeightMap, canon, complement, connected_components, induced_subgraph

EXACT_COVER_LIMIT = 24


@dataclass(frozen=True)
class EdgeCover:
    edges: tuple[Edge, ...]
    total_weight: float = 0

    def __len__(self) -> int:
        return len(self.edges)


def edge_connectivity(g: Graph) -> int:
    """Minimum degree, which equals edge connectivity for connected cographs."""
    if not g.is_connected():
        raise Disconnected("graph is disconnected")
    return g.min_degree()


def max_matching(h: Graph) -> set[Edge]:
    """A maximum-cardinality matching (Edmonds blossom via networkx)."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(h.n))
    nxg.add_edges_from(h.edges())
    return {canon(u, v) for u, v in nx.max_weight_matching(nxg, maxcardinality=True)}


def min_edge_cover(h: Graph) -> EdgeCover:
    """Minimum edge cover by Gallai's construction: maximum matching plus one edge per exposed vertex."""
    for v in range(h.n):
        if not h.adj[v]:
            raise IsolatedVertex(f"vertex {v} has no incident edge")
    matching = max_matching(h)
    covered = {v for e in matching for v in e}
    edges = set(matching)
    for v in range(h.n):
        if v not in covered:
            # an exposed vertex only has matched neighbours (else the matching grows)
            edges.add(canon(v, min(h.adj[v])))
    return EdgeCover(tuple(sorted(edges)), len(edges))


def _min_weight_cover(
    targets: list[int], options: dict[int, list[tuple[int, float]]]
) -> tuple[float, list[Edge]]:
    """Cheapest edge set touching every target vertex.

    ``options[v]`` lists ``(u, weight)`` for edges at target ``v``; ``u`` may or
    may not be a target. Memoized search on the set of uncovered targets,
    always branching on the lowest-indexed one.
    """
    if len(targets) > EXACT_COVER_LIMIT:
        raise InstanceTooLarge(
            f"exact weighted cover limited to {EXACT_COVER_LIMIT} vertices, got {len(targets)}"
        )
    pos = {v: i for i, v in enumerate(targets)}
    memo: dict[int, tuple[float, tuple[Edge, ...]]] = {0: (0.0, ())}

    def solve(uncovered: int) -> tuple[float, tuple[Edge, ...]]:
        # explicit stack keeps deep searches off the recursion limit
        stack = [uncovered]
        while stack:
            s = stack[-1]
            if s in memo:
                stack.pop()
                continue
            i = (s & -s).bit_length() - 1
            v = targets[i]
            nexts = []
            for u, _ in options[v]:
                j = pos.get(u)
                nexts.append(s & ~(1 << i) & ~((1 << j) if j is not None else 0))
            missing = [t for t in nexts if t not in memo]
            if missing:
                stack.extend(missing)
                continue
            best: tuple[float, tuple[Edge, ...]] | None = None
            for (u, wt), t in zip(options[v], nexts):
                cost = wt + memo[t][0]
                if best is None or cost < best[0]:
                    best = (cost, (canon(v, u),) + memo[t][1])
            if best is None:
                raise IsolatedVertex(f"vertex {v} has no incident edge")
            memo[s] = best
            stack.pop()
        return memo[uncovered]

    cost, edges = solve((1 << len(targets)) - 1)
    return cost, sorted(set(edges))


def min_weighted_edge_cover(h: Graph, w: WeightMap) -> EdgeCover:
    """Exact minimum-weight edge cover (at most 24 vertices)."""
    for v in range(h.n):
        if not h.adj[v]:
            raise IsolatedVertex(f"vertex {v} has no incident edge")
    if h.n > EXACT_COVER_LIMIT:
        raise InstanceTooLarge(f"exact weighted cover limited to {EXACT_COVER_LIMIT} vertices")
    w.require(h.edges())
    options = {v: [(u, w.weight(v, u)) for u in sorted(h.adj[v])] for v in range(h.n)}
    cost, edges = _min_weight_cover(list(range(h.n)), options)
    return EdgeCover(tuple(edges), sum(w.weight(u, v) for u, v in edges))


def _prepare(g: Graph) -> tuple[int, list[int], list[set[int]], Graph, dict[int, int]]:
    if not g.is_connected():
        raise Disconnected("graph is disconnected")
    decompose(g)  # NotCograph for non-cographs
    k = g.min_degree()
    if k == g.n - 1:
        raise CompleteGraph("graph is complete")
    x = [v for v in range(g.n) if g.degree(v) == k]
    co = complement(g)
    comps = connected_components(co, x)
    h, index = induced_subgraph(co, x)
    return k, x, comps, h, index


def low_degree_complement(g: Graph) -> tuple[list[int], Graph]:
    """Minimum-degree vertices ``X`` and the complement induced on them (relabelled)."""
    _, x, _, h, _ = _prepare(g)
    return x, h


def augment_edge(g: Graph) -> tuple[AugmentationSet, Graph]:
    """Fewest added edges lifting edge connectivity from ``k = δ(G)`` to ``k + 1``.

    Components of the complement on ``X``: a lone vertex gets one edge to its
    smallest-index non-neighbour; a larger component gets a minimum edge
    cover of itself. The count equals ``|X| - ν`` where ``ν`` is the
    matching number of that complement, which is a lower bound.
    """
    _, _, comps, h, index = _prepare(g)
    back = {i: v for v, i in index.items()}
    edges: list[Edge] = []
    for comp in comps:
        if len(comp) == 1:
            (x,) = comp
            edges.append(canon(x, g.non_neighbors(x)[0]))
            continue
        sub, sub_index = induced_subgraph(h, [index[v] for v in comp])
        sub_back = {i: back[j] for j, i in sub_index.items()}
        for a, b in min_edge_cover(sub).edges:
            edges.append(canon(sub_back[a], sub_back[b]))
    aug = AugmentationSet(tuple(sorted(edges)), 0)
    return aug, g.with_edges(aug.edges)


def augment_edge_weighted(
    g: Graph, w: WeightMap, strict: bool = False
) -> tuple[AugmentationSet, Graph]:
    """Minimum total weight of added non-edges lifting edge connectivity by one.

    Default: exact minimum-weight set of non-edges touching every vertex of
    ``X``, where a vertex may also be served by a non-edge leaving ``X``.
    ``strict=True`` follows the per-component recipe instead: a lone
    vertex takes its cheapest non-edge, a larger component takes its own
    minimum-weight cover. That recipe can overpay when a non-edge out of
    ``X`` is cheaper than any cover edge inside a component.
    """
    _, x, comps, h, index = _prepare(g)
    w.require(g.non_edges())
    edges: list[Edge] = []
    if strict:
        back = {i: v for v, i in index.items()}
        for comp in comps:
            if len(comp) == 1:
                (v,) = comp
                y = min(g.non_neighbors(v), key=lambda u: (w.weight(v, u), u))
                edges.append(canon(v, y))
                continue
            sub, sub_index = induced_subgraph(h, [index[v] for v in comp])
            sub_back = {i: back[j] for j, i in sub_index.items()}
            sub_w = WeightMap({(a, b): w.weight(sub_back[a], sub_back[b]) for a, b in sub.edges()})
            for a, b in min_weighted_edge_cover(sub, sub_w).edges:
                edges.append(canon(sub_back[a], sub_back[b]))
    else:
        options = {v: [(u, w.weight(v, u)) for u in g.non_neighbors(v)] for v in x}
        _, edges = _min_weight_cover(x, options)
    edges = sorted(set(edges))
    aug = AugmentationSet(tuple(edges), sum(w.weight(u, v) for u, v in edges))
    return aug, g.with_edges(aug.edges)

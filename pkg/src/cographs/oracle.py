"""Brute-force reference answers for small graphs.

Nothing here touches cotrees or the dynamic programs; everything works from
the adjacency of a :class:`~cographs.graph.Graph` converted to bitmasks.
Each routine enforces a hard size cap and raises InstanceTooLarge beyond it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .errors import Disconnected, InstanceTooLarge
from .graph import Graph, WeightMap


@dataclass(frozen=True)
class OracleReport:
    instance: str
    answer: Any
    oracle: Any

    @property
    def agree(self) -> bool:
        return self.answer == self.oracle


def _cap(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise InstanceTooLarge(f"oracle limited to n <= {limit}, got {g.n}")


def _masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in g.adj[v]) for v in range(g.n)]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _connected(adj: list[int], mask: int) -> bool:
    """Is the subgraph induced by ``mask`` connected (and non-empty)?"""
    if not mask:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nxt = adj[low.bit_length() - 1] & mask & ~seen
        seen |= nxt
        frontier |= nxt
    return seen == mask


def has_induced_p4(g: Graph) -> bool:
    """Quadruple scan: some 4 vertices induce a path on 3 edges."""
    for quad in itertools.combinations(range(g.n), 4):
        degs = [sum(g.has_edge(a, b) for b in quad if b != a) for a in quad]
        if sorted(degs) == [1, 1, 2, 2]:
            return True
    return False


def _has_p4_mask(adj: list[int], n: int) -> bool:
    for quad in itertools.combinations(range(n), 4):
        q = sum(1 << v for v in quad)
        degs = sorted(bin(adj[v] & q).count("1") for v in quad)
        if degs == [1, 1, 2, 2]:
            return True
    return False


# -- separators and connectivity -------------------------------------------


def _separators(adj: list[int], n: int) -> list[int]:
    full = (1 << n) - 1
    return [s for s in range(1, full) if not _connected(adj, full & ~s)]


def brute_minimal_separators(g: Graph) -> list[frozenset[int]]:
    """All inclusion-minimal vertex separators of a connected graph."""
    _cap(g, 12)
    adj = _masks(g)
    if not _connected(adj, (1 << g.n) - 1):
        raise Disconnected("oracle expects a connected graph")
    seps = sorted(_separators(adj, g.n), key=lambda s: bin(s).count("1"))
    minimal: list[int] = []
    for s in seps:
        if not any(t & s == t and t != s for t in seps if bin(t).count("1") < bin(s).count("1")):
            minimal.append(s)
    return sorted((frozenset(_bits(s)) for s in minimal), key=sorted)


def separator_masks(g: Graph) -> list[int]:
    """Every vertex separator as a bitmask (removal leaves >= 2 components)."""
    _cap(g, 12)
    return _separators(_masks(g), g.n)


def brute_min_connected_separator(g: Graph) -> list[frozenset[int]]:
    """All minimum-size separators that induce a connected subgraph."""
    _cap(g, 12)
    adj = _masks(g)
    cands = [s for s in _separators(adj, g.n) if _connected(adj, s)]
    if not cands:
        return []
    best = min(bin(s).count("1") for s in cands)
    return sorted((frozenset(_bits(s)) for s in cands if bin(s).count("1") == best), key=sorted)


def brute_min_stable_separator(g: Graph) -> list[frozenset[int]]:
    """All minimum-size separators that induce no edge."""
    _cap(g, 12)
    adj = _masks(g)
    cands = [s for s in _separators(adj, g.n) if all(adj[v] & s == 0 for v in _bits(s))]
    if not cands:
        return []
    best = min(bin(s).count("1") for s in cands)
    return sorted((frozenset(_bits(s)) for s in cands if bin(s).count("1") == best), key=sorted)


def _vertex_conn(adj: list[int], n: int) -> int:
    full = (1 << n) - 1
    if all(bin(adj[v]).count("1") == n - 1 for v in range(n)):
        return n - 1
    for k in range(n - 1):
        for s in itertools.combinations(range(n), k):
            if not _connected(adj, full & ~sum(1 << v for v in s)):
                return k
    return n - 1


def _edge_conn(adj: list[int], n: int) -> int:
    if n == 1:
        return 0
    best = None
    # bipartitions (A, V\A) with vertex 0 in A
    for rest in range(0, 1 << (n - 1)):
        a = (rest << 1) | 1
        if a == (1 << n) - 1:
            continue
        cut = sum(bin(adj[v] & ~a).count("1") for v in _bits(a))
        best = cut if best is None else min(best, cut)
    return best


def brute_connectivity(g: Graph, mode: str) -> int:
    """Vertex or edge connectivity by exhaustive search (n <= 10)."""
    _cap(g, 10)
    adj = _masks(g)
    if not _connected(adj, (1 << g.n) - 1):
        raise Disconnected("oracle expects a connected graph")
    if mode == "vertex":
        return _vertex_conn(adj, g.n)
    if mode == "edge":
        return _edge_conn(adj, g.n)
    raise ValueError(f"mode must be 'vertex' or 'edge', not {mode!r}")


# -- paths, cycles, trees ---------------------------------------------------


def _path_ends(adj: list[int], n: int) -> list[int]:
    """ends[mask] = bitmask of vertices at which a path spanning exactly ``mask`` can end."""
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        for v in _bits(e):
            for u in _bits(adj[v] & ~mask):
                ends[mask | (1 << u)] |= 1 << u
    return ends


@lru_cache(maxsize=4096)
def _path_masks_cached(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    ends = _path_ends(list(adj), n)
    return tuple(m for m in range(1, 1 << n) if ends[m])


def path_vertex_sets(g: Graph) -> tuple[int, ...]:
    """Bitmasks of all vertex sets that some simple path visits exactly."""
    _cap(g, 10)
    return _path_masks_cached(g.n, tuple(_masks(g)))


def brute_longest_path(g: Graph) -> int:
    """Vertex count of a longest simple path."""
    _cap(g, 10)
    if g.n == 0:
        return 0
    return max(bin(m).count("1") for m in path_vertex_sets(g))


def brute_hamiltonian_path(g: Graph) -> bool:
    _cap(g, 10)
    return brute_longest_path(g) == g.n


def brute_steiner_path(g: Graph, terminals) -> int | None:
    """Fewest non-terminals on a simple path through all terminals, or None."""
    _cap(g, 8)
    t = sum(1 << v for v in terminals)
    best = None
    for m in path_vertex_sets(g):
        if m & t == t:
            extra = bin(m & ~t).count("1")
            best = extra if best is None else min(best, extra)
    return best


@lru_cache(maxsize=4096)
def _cycle_masks_cached(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for s in range(n):
        # paths starting at s that use only vertices >= s
        reach = {1 << s: 1 << s}
        for mask in range(1 << s, 1 << n):
            if not (mask >> s) & 1 or mask & ((1 << s) - 1):
                continue
            e = reach.get(mask, 0)
            if not e:
                continue
            if bin(mask).count("1") >= 3 and e & adj[s]:
                out.append(mask)
            for v in _bits(e):
                for u in _bits(adj[v] & ~mask):
                    if u > s:
                        key = mask | (1 << u)
                        reach[key] = reach.get(key, 0) | (1 << u)
    return tuple(sorted(set(out)))


def cycle_vertex_sets(g: Graph) -> tuple[int, ...]:
    """Bitmasks of all vertex sets that some simple cycle (length >= 3) visits exactly."""
    _cap(g, 8)
    return _cycle_masks_cached(g.n, tuple(_masks(g)))


def brute_hamiltonian_cycle(g: Graph) -> bool:
    _cap(g, 8)
    full = (1 << g.n) - 1
    return full in cycle_vertex_sets(g)


def brute_steiner_cycle(g: Graph, terminals) -> bool:
    """Does some simple cycle pass through every terminal?"""
    _cap(g, 8)
    t = sum(1 << v for v in terminals)
    return any(m & t == t for m in cycle_vertex_sets(g))


def brute_mlst_leaves(g: Graph) -> int:
    """Minimum number of leaves over all spanning trees (n <= 7)."""
    _cap(g, 7)
    if g.n < 2:
        raise ValueError("need at least two vertices")
    edges = g.edges()
    best = None
    for combo in itertools.combinations(edges, g.n - 1):
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for u, v in combo:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if not ok:
            continue
        deg = [0] * g.n
        for u, v in combo:
            deg[u] += 1
            deg[v] += 1
        leaves = deg.count(1)
        best = leaves if best is None else min(best, leaves)
    if best is None:
        raise Disconnected("graph has no spanning tree")
    return best


# -- matchings and covers ---------------------------------------------------


def brute_max_matching(g: Graph) -> int:
    """Size of a maximum matching by exhaustive recursion (n <= 8)."""
    _cap(g, 8)
    adj = _masks(g)

    @lru_cache(maxsize=None)
    def best(free: int) -> int:
        if not free:
            return 0
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        out = best(rest)
        for u in _bits(adj[v] & rest):
            out = max(out, 1 + best(rest & ~(1 << u)))
        return out

    return best((1 << g.n) - 1)


def brute_min_edge_cover(g: Graph, w: WeightMap | None = None) -> float | None:
    """Minimum cardinality (or weight) edge cover via a knapsack over edge subsets."""
    _cap(g, 8)
    full = (1 << g.n) - 1
    inf = float("inf")
    cost = [inf] * (1 << g.n)
    cost[0] = 0
    for u, v in g.edges():
        c = 1 if w is None else w.weight(u, v)
        e = (1 << u) | (1 << v)
        for s in range(full, -1, -1):
            if cost[s] < inf and cost[s | e] > cost[s] + c:
                cost[s | e] = cost[s] + c
    return None if cost[full] == inf else cost[full]


# -- augmentation -----------------------------------------------------------


def brute_min_augmentation(
    g: Graph,
    target_kind: str,
    preserve_cograph: bool,
    weights: WeightMap | None = None,
) -> tuple[float, list[tuple[int, int]]] | None:
    """Cheapest set of non-edges lifting connectivity from k to at least k+1.

    Cost is the number of added edges, or their total weight when
    ``weights`` is given. Returns ``(cost, edges)`` or None when no subset
    works. Subsets are scanned in order of increasing cost.
    """
    _cap(g, 6)
    adj0 = _masks(g)
    n = g.n
    conn = _vertex_conn if target_kind == "vertex" else _edge_conn
    if target_kind not in ("vertex", "edge"):
        raise ValueError(f"target_kind must be 'vertex' or 'edge', not {target_kind!r}")
    k = conn(adj0, n)
    cand = g.non_edges()
    m = len(cand)
    price = [1 if weights is None else weights.weight(u, v) for u, v in cand]
    total = [0.0] * (1 << m)
    for s in range(1, 1 << m):
        low = s & -s
        total[s] = total[s ^ low] + price[low.bit_length() - 1]
    for s in sorted(range(1 << m), key=lambda s: (total[s], s)):
        adj = list(adj0)
        for i in _bits(s):
            u, v = cand[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if conn(adj, n) < k + 1:
            continue
        if preserve_cograph and _has_p4_mask(adj, n):
            continue
        return total[s], [cand[i] for i in _bits(s)]
    return None

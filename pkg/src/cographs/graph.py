"""Undirected simple graphs on dense vertex indices and complement-edge weights."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Mapping

from .errors import InputError, MissingWeight

Edge = tuple[int, int]


def canon(u: int, v: int) -> Edge:
    """Canonical unordered pair (smaller index first)."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is a frozenset of neighbours. Anything that depends on
    iteration order sorts explicitly, so results never depend on set layout.
    """

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, adj: Iterable[Iterable[int]] | None = None):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        self.n = n
        if adj is None:
            self.adj: tuple[frozenset[int], ...] = tuple(frozenset() for _ in range(n))
        else:
            self.adj = tuple(frozenset(a) for a in adj)
            if len(self.adj) != n:
                raise InputError("adjacency length differs from n")
            for v, nbrs in enumerate(self.adj):
                if v in nbrs:
                    raise InputError(f"self-loop at {v}")
                for u in nbrs:
                    if not 0 <= u < n or v not in self.adj[u]:
                        raise InputError(f"asymmetric or out-of-range adjacency at {v}-{u}")
        self._m = sum(len(a) for a in self.adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = e
            if u == v:
                raise InputError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, [set(range(n)) - {v} for v in range(n)])

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def non_neighbors(self, v: int) -> list[int]:
        """Sorted complement neighbourhood of ``v``."""
        a = self.adj[v]
        return [u for u in range(self.n) if u != v and u not in a]

    def edges(self) -> list[Edge]:
        """All edges as sorted canonical pairs."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def non_edges(self) -> list[Edge]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if v not in self.adj[u]
        ]

    def is_complete(self) -> bool:
        return self._m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return self.n > 0 and len(connected_components(self)) == 1

    def with_edges(self, extra: Iterable[Edge]) -> Graph:
        """Copy of this graph with ``extra`` edges added."""
        adj = [set(a) for a in self.adj]
        for u, v in extra:
            if u == v:
                raise InputError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(self.n, adj)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    everyone = frozenset(range(g.n))
    return Graph(g.n, [everyone - g.adj[v] - {v} for v in range(g.n)])


def connected_components(g: Graph, vertices: Iterable[int] | None = None) -> list[set[int]]:
    """Components of ``g`` (or of ``g[vertices]``), ordered by smallest member."""
    pool = set(range(g.n)) if vertices is None else set(vertices)
    comps = []
    for s in sorted(pool):
        if s not in pool:
            continue
        pool.discard(s)
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if u in pool:
                    pool.discard(u)
                    comp.add(u)
                    queue.append(u)
        comps.append(comp)
    return comps


def co_components(g: Graph, vertices: Iterable[int] | None = None) -> list[set[int]]:
    """Components of the complement of ``g[vertices]`` without building it.

    Uses the unvisited-set trick: each BFS step removes the vertex's
    neighbours from the frontier candidates, so the cost is
    O(|vertices| + sum of degrees).
    """
    order = sorted(range(g.n) if vertices is None else vertices)
    unvisited = set(order)
    comps = []
    for s in order:
        if s not in unvisited:
            continue
        unvisited.discard(s)
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            nbrs = g.adj[v]
            if len(nbrs) < len(unvisited):
                reached = [u for u in unvisited if u not in nbrs]
            else:
                reached = list(unvisited - nbrs)
            for u in reached:
                unvisited.discard(u)
                comp.add(u)
                queue.append(u)
        comps.append(comp)
    return comps


def induced_subgraph(g: Graph, a: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``a`` relabelled to ``0..|a|-1`` in increasing order.

    Returns the subgraph and the old-to-new index map.
    """
    verts = sorted(set(a))
    for v in verts:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(verts)}
    adj = [{index[u] for u in g.adj[v] if u in index} for v in verts]
    return Graph(len(verts), adj), index


class WeightMap(Mapping[Edge, float]):
    """Positive weights keyed by canonical unordered vertex pairs."""

    def __init__(self, entries: Mapping[Edge, float] | Iterable[tuple[int, int, float]] = ()):
        self._w: dict[Edge, float] = {}
        items = entries.items() if isinstance(entries, Mapping) else (((u, v), w) for u, v, w in entries)
        for (u, v), w in items:
            if u == v:
                raise InputError(f"weight on self-pair ({u}, {v})")
            if not w > 0:
                raise InputError(f"weight for ({u}, {v}) must be positive, got {w}")
            key = canon(u, v)
            if key in self._w:
                raise InputError(f"duplicate weight for {key}")
            self._w[key] = float(w) if not isinstance(w, int) else w
        self._w = dict(sorted(self._w.items()))

    @classmethod
    def uniform(cls, pairs: Iterable[Edge], value: float = 1) -> WeightMap:
        return cls({canon(u, v): value for u, v in pairs})

    def __getitem__(self, key: Edge) -> float:
        return self._w[canon(*key)]

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._w)

    def __len__(self) -> int:
        return len(self._w)

    def weight(self, u: int, v: int) -> float:
        try:
            return self._w[canon(u, v)]
        except KeyError:
            raise MissingWeight(f"no weight for pair {canon(u, v)}") from None

    def require(self, pairs: Iterable[Edge]) -> None:
        """Raise MissingWeight unless every pair has a weight."""
        for u, v in pairs:
            self.weight(u, v)

    def scaled(self, factor: float) -> WeightMap:
        return WeightMap({k: w * factor for k, w in self._w.items()})

    def __repr__(self) -> str:
        return f"WeightMap({self._w!r})"

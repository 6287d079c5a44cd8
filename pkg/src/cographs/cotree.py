"""Cotrees and binary parse trees: recognition, realization, generation.

Internal nodes are labelled ``UNION`` (0) or ``JOIN`` (1). A cotree is the
canonical form (labels alternate along every root-leaf path, every internal
node has at least two children, children sorted by ``(size, min_leaf)``).
A parse tree is any binary tree realizing the same graph.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .errors import InputError, NotCograph
from .graph import Graph, co_components, connected_components

UNION = 0
JOIN = 1


@dataclass(frozen=True, slots=True)
class Leaf:
    vertex: int

    @property
    def size(self) -> int:
        return 1

    @property
    def min_leaf(self) -> int:
        return self.vertex

    @property
    def is_leaf(self) -> bool:
        return True


@dataclass(frozen=True, slots=True)
class Internal:
    label: int
    children: tuple[Node, ...]
    size: int = field(init=False, compare=False, repr=False)
    min_leaf: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.label not in (UNION, JOIN):
            raise InputError(f"bad node label {self.label!r}")
        if len(self.children) < 2:
            raise InputError("internal node needs at least two children")
        object.__setattr__(self, "size", sum(c.size for c in self.children))
        object.__setattr__(self, "min_leaf", min(c.min_leaf for c in self.children))

    @property
    def is_leaf(self) -> bool:
        return False


Node = Union[Leaf, Internal]


@dataclass(frozen=True)
class Cotree:
    root: Node

    @property
    def vertex_count(self) -> int:
        return self.root.size


@dataclass(frozen=True)
class ParseTree:
    root: Node

    @property
    def vertex_count(self) -> int:
        return self.root.size


def _canonical_key(node: Node) -> tuple[int, int]:
    return (node.size, node.min_leaf)


def leaves(node: Node) -> list[int]:
    """Leaf vertices of the subtree in left-to-right order."""
    out = []
    stack = [node]
    while stack:
        x = stack.pop()
        if x.is_leaf:
            out.append(x.vertex)
        else:
            stack.extend(reversed(x.children))
    return out


def postorder(node: Node) -> Iterator[Node]:
    """Nodes of the subtree in post-order, without recursion."""
    stack: list[tuple[Node, bool]] = [(node, False)]
    while stack:
        x, expanded = stack.pop()
        if x.is_leaf or expanded:
            yield x
        else:
            stack.append((x, True))
            stack.extend((c, False) for c in reversed(x.children))


def _build(desc, canonical: bool) -> Node:
    """Turn nested ``[label, [children]]`` / ``int`` descriptions into nodes, iteratively."""
    if isinstance(desc, int):
        return Leaf(desc)
    built: dict[int, Node] = {}
    stack = [(desc, False)]
    while stack:
        s, expanded = stack.pop()
        if not expanded:
            stack.append((s, True))
            stack.extend((c, False) for c in s[1] if not isinstance(c, int))
            continue
        kids = [Leaf(c) if isinstance(c, int) else built.pop(id(c)) for c in s[1]]
        if canonical:
            kids.sort(key=_canonical_key)
        built[id(s)] = Internal(s[0], tuple(kids))
    return built[id(desc)]


def decompose(g: Graph) -> Cotree:
    """Canonical cotree of ``g``; raises NotCograph if ``g`` has an induced P4."""
    if g.n < 1:
        raise InputError("graph must have at least one vertex")
    if g.n == 1:
        return Cotree(Leaf(0))
    root: list = []
    # (vertex set, child list to append to, label of parent node)
    stack: list[tuple[set[int], list, int | None]] = [(set(range(g.n)), root, None)]
    while stack:
        verts, holder, parent = stack.pop()
        if len(verts) == 1:
            holder.append(next(iter(verts)))
            continue
        # a union node's child is connected, so only the complement can split it
        parts = connected_components(g, verts) if parent != UNION else [verts]
        label = UNION
        if len(parts) == 1:
            parts = co_components(g, verts)
            label = JOIN
            if len(parts) == 1:
                raise NotCograph(
                    f"vertex set {sorted(verts)[:8]}{'...' if len(verts) > 8 else ''} "
                    "is connected and co-connected (induced P4 present)"
                )
        node = [label, []]
        holder.append(node)
        for p in parts:
            stack.append((p, node[1], label))
    return Cotree(_build(root[0], canonical=True))


def realize(t: Cotree | ParseTree | Node) -> Graph:
    """The graph denoted by a cotree or parse tree (union/join semantics)."""
    root = t if isinstance(t, (Leaf, Internal)) else t.root
    n = root.size
    verts = leaves(root)
    if sorted(verts) != list(range(n)):
        raise InputError("tree leaves must be exactly 0..n-1")
    adj: list[set[int]] = [set() for _ in range(n)]
    below: dict[int, list[int]] = {}
    for x in postorder(root):
        if x.is_leaf:
            below[id(x)] = [x.vertex]
            continue
        parts = [below.pop(id(c)) for c in x.children]
        if x.label == JOIN:
            for i, j in itertools.combinations(range(len(parts)), 2):
                for u in parts[i]:
                    adj[u].update(parts[j])
                for v in parts[j]:
                    adj[v].update(parts[i])
        below[id(x)] = [v for p in parts for v in p]
    return Graph(n, adj)


def binarize(t: Cotree) -> ParseTree:
    """Left-deep binary parse tree: children c1..ck become (((c1,c2),c3)...,ck)."""
    built: dict[int, Node] = {}
    for x in postorder(t.root):
        if x.is_leaf:
            built[id(x)] = x
            continue
        kids = [built.pop(id(c)) for c in x.children]
        acc = kids[0]
        for c in kids[1:]:
            acc = Internal(x.label, (acc, c))
        built[id(x)] = acc
    return ParseTree(built[id(t.root)])


def is_canonical(t: Cotree) -> bool:
    for x in postorder(t.root):
        if x.is_leaf:
            continue
        if len(x.children) < 2:
            return False
        for c in x.children:
            if not c.is_leaf and c.label == x.label:
                return False
        keys = [_canonical_key(c) for c in x.children]
        if keys != sorted(keys):
            return False
    return True


def random_cograph(n: int, seed: int, root_label: int = JOIN) -> Cotree:
    """Random canonical cotree with ``n`` leaves, deterministic in ``(n, seed)``.

    Each internal node splits its leaf budget into 2-4 parts at uniformly
    drawn cut points; labels alternate starting from ``root_label``.
    Vertex ids are a seeded permutation of ``0..n-1``.
    """
    if n < 1:
        raise InputError("n must be at least 1")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    next_id = iter(perm)
    if n == 1:
        return Cotree(Leaf(next(next_id)))
    root: list = []
    stack: list[tuple[int, int, list]] = [(n, root_label, root)]
    while stack:
        size, label, holder = stack.pop()
        if size == 1:
            holder.append(next(next_id))
            continue
        k = rng.randint(2, min(4, size))
        cuts = sorted(rng.sample(range(1, size), k - 1))
        bounds = [0, *cuts, size]
        node = [label, []]
        holder.append(node)
        for a, b in zip(bounds, bounds[1:]):
            stack.append((b - a, 1 - label, node[1]))
    return Cotree(_relayout(_build(root[0], canonical=True)))


def _relayout(root: Node) -> Node:
    """Rebuild a tree so objects are allocated in post-order.

    Traversals then walk memory mostly forward, which keeps large trees
    cache friendly. ``v + 0`` allocates a fresh int next to its leaf.
    """
    built: dict[int, Node] = {}
    for x in postorder(root):
        if x.is_leaf:
            built[id(x)] = Leaf(x.vertex + 0)
        else:
            built[id(x)] = Internal(x.label, tuple(built.pop(id(c)) for c in x.children))
    return built[id(root)]


# -- exhaustive enumeration of unlabeled cotrees --------------------------

Shape = Union[int, tuple]  # 1 for a leaf, tuple of child shapes otherwise


def _shape_size(s: Shape) -> int:
    return 1 if s == 1 else sum(_shape_size(c) for c in s)


def _shape_key(s: Shape) -> tuple:
    return (1, ()) if s == 1 else (_shape_size(s), tuple(_shape_key(c) for c in s))


def _partitions(n: int, min_part: int = 1) -> Iterator[list[int]]:
    """Non-decreasing partitions of n with all parts >= min_part."""
    if n == 0:
        yield []
        return
    for p in range(min_part, n + 1):
        for rest in _partitions(n - p, p):
            yield [p, *rest]


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple[Shape, ...]:
    """All unordered trees with n leaves whose internal nodes have >= 2 children."""
    if n == 1:
        return (1,)
    out = []
    for parts in _partitions(n):
        if len(parts) < 2:
            continue
        groups = [(s, len(list(g))) for s, g in itertools.groupby(parts)]
        choices = [
            list(itertools.combinations_with_replacement(_shapes(s), r)) for s, r in groups
        ]
        for combo in itertools.product(*choices):
            kids = [c for grp in combo for c in grp]
            kids.sort(key=_shape_key)
            out.append(tuple(kids))
    return tuple(out)


def _shape_to_tree(shape: Shape, label: int) -> Node:
    counter = itertools.count()

    def desc(s: Shape, lab: int):
        if s == 1:
            return next(counter)
        return [lab, [desc(c, 1 - lab) for c in s]]

    return _build(desc(shape, label), canonical=True)


def enumerate_cotrees(n: int) -> Iterator[Cotree]:
    """Every canonical cotree with ``n`` leaves (one per unlabeled cograph).

    Leaves are numbered in depth-first order, so each tree equals
    ``decompose(realize(tree))``.
    """
    if not 1 <= n <= 10:
        raise InputError("enumerate_cotrees supports 1 <= n <= 10")
    if n == 1:
        yield Cotree(Leaf(0))
        return
    for label in (JOIN, UNION):
        for shape in _shapes(n):
            yield Cotree(_shape_to_tree(shape, label))

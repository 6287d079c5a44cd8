"""Longest path, Hamiltonian path and Hamiltonian cycle on a binary parse tree.

Each node keeps a state ``(P, U)``: ``P`` is a longest path of the node's
subgraph and ``U`` holds vertex-disjoint leftover paths that, together with
``P``, cover the subgraph. Across the tree ``1 + |U|`` is the path cover
number, and for every ``j`` the ``j`` longest paths of ``[P] + U`` cover as
many vertices as any ``j`` disjoint paths can. The join step relies on
that property.

Join step, children indexed so that ``|U1| >= |U2|`` (``Q`` = paths of
``U1`` longest first, ``R`` = paths of ``U2``, ``y`` = vertices of ``P2``
taken from its tail):

* ``|U1| == |U2|``: ``Q1 R1 Q2 R2 ... P1 P2``, a spanning path;
* otherwise alternate ``Q_i`` with single vertices of the ``R`` paths until
  the ``Q`` surplus is one (then ``Q R ... Q P2 P1``, spanning) or the ``R``
  paths run out (then ``Q y Q y ... P1`` followed by the unused prefix of
  ``P2``; unused ``Q`` paths stay in ``U``).

``U`` lists are stored shortest-first so the longest path is popped from
the end in O(1).
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .cotree import JOIN, Node, ParseTree, postorder, realize
from .errors import Disconnected, InputError, TooSmall, TreeMismatch
from .graph import Graph

Path = list[int]


@dataclass(frozen=True)
class PathDPState:
    """Snapshot of one node's state; ``U`` listed longest first."""

    P: tuple[int, ...]
    U: tuple[tuple[int, ...], ...]


def _merge_into(big: list[Path], small: list[Path]) -> list[Path]:
    if len(big) < len(small):
        big, small = small, big
    for p in small:
        bisect.insort(big, p, key=len)
    return big


def union_step(p1: Path, u1: list[Path], p2: Path, u2: list[Path]) -> tuple[Path, list[Path]]:
    if len(p2) > len(p1):
        p1, u1, p2, u2 = p2, u2, p1, u1
    u = _merge_into(u1, u2)
    bisect.insort(u, p2, key=len)
    return p1, u


def join_walk(
    p1: Path, u1: list[Path], p2: Path, u2: list[Path]
) -> tuple[Path, int | None]:
    """Alternating walk of a join node; children already ordered with ``|u1| >= |u2|``.

    Returns ``(walk, c)``. ``c is None`` means ``walk`` is a spanning path of
    the join. Otherwise the walk ends in a vertex of the second child, the
    unused ``Q`` paths are left in ``u1``, and ``p1`` followed by ``p2[:c]``
    still has to be appended.
    """
    a, b = len(u1), len(u2)
    out: Path = []
    if a == b:
        while u1:
            out.extend(u1.pop())
            out.extend(u2.pop())
        out.extend(p1)
        out.extend(p2)
        return out, None
    rs = u2[::-1]
    u2.clear()
    j = k = 0
    while a > b + 1 and b > 0:
        out.extend(u1.pop())
        a -= 1
        out.append(rs[j][k])
        k += 1
        if k == len(rs[j]):
            j, k, b = j + 1, 0, b - 1
    if a == b + 1:
        while b > 0:
            out.extend(u1.pop())
            out.extend(rs[j][k:])
            j, k, a, b = j + 1, 0, a - 1, b - 1
        out.extend(u1.pop())
        out.extend(p2)
        out.extend(p1)
        return out, None
    c = len(p2)
    while u1 and c > 0:
        out.extend(u1.pop())
        out.append(p2[c - 1])
        c -= 1
    return out, c


def join_step(p1: Path, u1: list[Path], p2: Path, u2: list[Path]) -> tuple[Path, list[Path]]:
    if len(u2) > len(u1):
        p1, u1, p2, u2 = p2, u2, p1, u1
    walk, c = join_walk(p1, u1, p2, u2)
    if c is None:
        return walk, []
    walk.extend(p1)
    walk.extend(p2[:c])
    return walk, u1


def path_dp(root: Node, trace: list | None = None) -> tuple[Path, list[Path]]:
    """Post-order DP; returns ``(P, U)`` at ``root`` with ``U`` shortest first.

    With ``trace`` given, a :class:`PathDPState` snapshot per node is
    appended as ``(node, state)`` in post-order.
    """
    states: dict[int, tuple[Path, list[Path]]] = {}
    for x in postorder(root):
        if x.is_leaf:
            st = ([x.vertex], [])
        else:
            if len(x.children) != 2:
                raise InputError("parse tree must be binary")
            s1 = states.pop(id(x.children[0]))
            s2 = states.pop(id(x.children[1]))
            st = (join_step if x.label == JOIN else union_step)(s1[0], s1[1], s2[0], s2[1])
        states[id(x)] = st
        if trace is not None:
            trace.append((x, PathDPState(tuple(st[0]), tuple(tuple(p) for p in reversed(st[1])))))
    return states[id(root)]


def orient(path: Path) -> Path:
    """Canonical direction: first vertex not larger than the last."""
    return path[::-1] if path and path[0] > path[-1] else path


def check_tree(g: Graph, pt: ParseTree) -> None:
    if pt.vertex_count != g.n or realize(pt) != g:
        raise TreeMismatch("parse tree does not realize the graph")


def longest_path(g: Graph, pt: ParseTree) -> Path:
    """A longest simple path of the cograph ``g`` (vertex list)."""
    check_tree(g, pt)
    return orient(path_dp(pt.root)[0])


def _root_split(g: Graph, pt: ParseTree):
    """DP states of the two root children, ordered so ``|U1| >= |U2|``, plus ``|G2|``."""
    check_tree(g, pt)
    root = pt.root
    if root.is_leaf:
        return None
    if root.label != JOIN:
        raise Disconnected("graph is disconnected")
    c1, c2 = root.children
    s1, s2 = path_dp(c1), path_dp(c2)
    if len(s2[1]) > len(s1[1]):
        s1, s2, c1, c2 = s2, s1, c2, c1
    return s1, s2, c2.size


def hamiltonian_path_exists(g: Graph, pt: ParseTree) -> tuple[bool, Path | None]:
    """``(True, spanning path)`` iff ``|U1| <= |G2|`` at the root join, else ``(False, None)``."""
    split = _root_split(g, pt)
    if split is None:
        return True, [pt.root.vertex]
    s1, s2, g2 = split
    if len(s1[1]) > g2:
        return False, None
    p, u = join_step(s1[0], s1[1], s2[0], s2[1])
    assert not u and len(p) == g.n
    return True, orient(p)


def hamiltonian_cycle_exists(g: Graph, pt: ParseTree) -> bool:
    """True iff ``|U1| <= |G2| - 1`` at the root join (needs ``n >= 3``)."""
    if g.n < 3:
        raise TooSmall("a Hamiltonian cycle needs at least three vertices")
    s1, _, g2 = _root_split(g, pt)
    return len(s1[1]) <= g2 - 1

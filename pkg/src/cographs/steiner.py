"""Steiner path and Steiner cycle through a terminal set on a binary parse tree.

Default method: for every node and every count ``y`` of non-terminals
drawn from its subtree, keep the smallest path cover number of a
subgraph induced by the subtree's terminals plus ``y`` non-terminals.
Path cover numbers compose exactly:

* union: ``pc = pc1 + pc2``;
* join of non-empty sides with ``n1``, ``n2`` vertices:
  ``pc = max(1, pc1 - n2, pc2 - n1)``.

Both rules are monotone in the child values, so keeping the minimum per
``y`` is enough. The answer is the smallest ``y`` with ``pc <= 1`` at the
root. The chosen vertex set is rebuilt top-down, the parse tree is cut down
to it, and the longest-path DP turns it into an actual path.

A join of two non-empty vertex sets has a Hamiltonian cycle iff some
``t`` satisfies ``max(pc1, pc2) <= t <= min(n1, n2)`` with at least three
vertices overall. The Steiner cycle test checks that at every join node
that holds all terminals.

``strict=True`` runs the older three-state construction (path over
terminals, leftover terminal paths, non-terminal pool) that only pulls
non-terminals in at the root. It misses valid paths: in
``z + (K_{1,3} with centre y and leaves t1,t2,t3, plus an isolated w)``
with terminals ``{t1,t2,t3}`` the path ``t1 y t2 z t3`` exists but the
strict mode reports none.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cotree import JOIN, Internal, Leaf, Node, ParseTree, postorder
from .errors import Disconnected, EmptyTerminals, InputError, TooSmall
from .graph import Graph
from .longest_path import check_tree, orient, path_dp

INF = float("inf")


def _terminal_set(g: Graph, terminals: Iterable[int]) -> frozenset[int]:
    xs = frozenset(terminals)
    if not xs:
        raise EmptyTerminals("terminal set is empty")
    bad = [v for v in xs if not (isinstance(v, int) and 0 <= v < g.n)]
    if bad:
        raise InputError(f"terminals out of range: {sorted(bad)}")
    return xs


def _prepare(g: Graph, pt: ParseTree, terminals) -> frozenset[int]:
    xs = _terminal_set(g, terminals)
    check_tree(g, pt)
    if not pt.root.is_leaf and pt.root.label != JOIN:
        raise Disconnected("graph is disconnected")
    return xs


# ---------------------------------------------------------------- cover tables


@dataclass
class _Table:
    terminals: int  # terminals in the subtree
    best: list  # best[y] = min path cover number using y non-terminals
    split: list | None = None  # split[y] = y taken from the first child


def _combine(label: int, t1: _Table, t2: _Table) -> _Table:
    best = [INF] * (len(t1.best) + len(t2.best) - 1)
    split = [0] * len(best)
    x1, x2 = t1.terminals, t2.terminals
    for y1, p1 in enumerate(t1.best):
        n1 = x1 + y1
        for y2, p2 in enumerate(t2.best):
            n2 = x2 + y2
            if label != JOIN:
                p = p1 + p2
            elif n1 == 0:
                p = p2
            elif n2 == 0:
                p = p1
            else:
                p = max(1, p1 - n2, p2 - n1)
            if p < best[y1 + y2]:
                best[y1 + y2] = p
                split[y1 + y2] = y1
    return _Table(x1 + x2, best, split)


def _leaf_table(v: int, xs: frozenset[int]) -> _Table:
    return _Table(1, [1]) if v in xs else _Table(0, [0, 1])


def _cycle_at(t1: _Table, t2: _Table) -> bool:
    for y1, p1 in enumerate(t1.best):
        n1 = t1.terminals + y1
        for y2, p2 in enumerate(t2.best):
            n2 = t2.terminals + y2
            if n1 and n2 and n1 + n2 >= 3 and max(p1, p2) <= min(n1, n2):
                return True
    return False


def _tables(root: Node, xs: frozenset[int], want_cycle: bool = False):
    tables: dict[int, _Table] = {}
    cycle = False
    for x in postorder(root):
        if x.is_leaf:
            tables[id(x)] = _leaf_table(x.vertex, xs)
            continue
        t1, t2 = (tables[id(c)] for c in x.children)
        if want_cycle and x.label == JOIN and t1.terminals + t2.terminals == len(xs):
            cycle = cycle or _cycle_at(t1, t2)
        tables[id(x)] = _combine(x.label, t1, t2)
    return tables, cycle


def _chosen_vertices(root: Node, tables: dict[int, _Table], y: int) -> set[int]:
    keep: set[int] = set()
    stack = [(root, y)]
    while stack:
        x, want = stack.pop()
        if x.is_leaf:
            if want or tables[id(x)].terminals:
                keep.add(x.vertex)
            continue
        y1 = tables[id(x)].split[want]
        stack.append((x.children[0], y1))
        stack.append((x.children[1], want - y1))
    return keep


def restrict(root: Node, keep: set[int]) -> Node | None:
    """Parse tree of the subgraph induced by ``keep`` (unary nodes collapsed)."""
    built: dict[int, Node | None] = {}
    for x in postorder(root):
        if x.is_leaf:
            built[id(x)] = x if x.vertex in keep else None
            continue
        kids = [built.pop(id(c)) for c in x.children]
        kids = [k for k in kids if k is not None]
        if not kids:
            built[id(x)] = None
        elif len(kids) == 1:
            built[id(x)] = kids[0]
        else:
            built[id(x)] = Internal(x.label, tuple(kids))
    return built[id(root)]


def min_extra_vertices(g: Graph, pt: ParseTree, terminals) -> int | None:
    """Fewest non-terminals a path through all terminals must use, or None."""
    xs = _prepare(g, pt, terminals)
    tables, _ = _tables(pt.root, xs)
    best = tables[id(pt.root)].best
    return next((y for y, p in enumerate(best) if p <= 1), None)


# ---------------------------------------------------------------- strict mode


@dataclass(frozen=True)
class SteinerDPState:
    """State of the root-only-injection construction; ``U`` longest first."""

    S: tuple[int, ...]
    U: tuple[tuple[int, ...], ...]
    L: tuple[int, ...]


def _strict_union(s1: SteinerDPState, s2: SteinerDPState) -> SteinerDPState:
    if len(s2.S) > len(s1.S):
        s1, s2 = s2, s1
    pool = list(s1.U) + list(s2.U) + ([s2.S] if s2.S else [])
    pool.sort(key=len, reverse=True)
    return SteinerDPState(s1.S, tuple(pool), s1.L + s2.L)


def _strict_join(s1: SteinerDPState, s2: SteinerDPState, at_root: bool) -> SteinerDPState:
    if len(s2.U) > len(s1.U):
        s1, s2 = s2, s1
    qs, rs = list(s1.U), list(s2.U)
    S1, S2 = list(s1.S), list(s2.S)
    L = s1.L + s2.L
    out: list[int] = []
    if len(qs) == len(rs):
        if not S1 and S2:
            for q, r in zip(qs, rs):
                out += r + q
            out += S2
        else:
            for q, r in zip(qs, rs):
                out += q + r
            out += S1 + S2
        return SteinerDPState(tuple(out), (), L)

    a, b, c, d = len(qs), len(rs), len(S2), len(s2.L)
    i = j = k = 0

    def take_vertices(limit_gap: int) -> None:
        # alternate Q_i with single vertices of the R paths
        nonlocal i, j, k, a, b
        while a > b + limit_gap and b > 0 and i < len(qs):
            out.extend(qs[i])
            out.append(rs[j][k])
            i, k, a = i + 1, k + 1, a - 1
            if k == len(rs[j]):
                j, k, b = j + 1, 0, b - 1

    def interleave_rest() -> None:
        nonlocal i, j, k, a, b
        while i < len(qs):
            out.extend(qs[i])
            i, a = i + 1, a - 1
            if j < len(rs):
                out.extend(rs[j][k:])
                j, k, b = j + 1, 0, b - 1

    def take_tail_of_s2() -> None:
        nonlocal i, a, c
        while i < len(qs) and c > 0:
            out.extend(qs[i])
            out.append(S2[c - 1])
            i, a, c = i + 1, a - 1, c - 1

    if not S1:
        take_vertices(1)
        if a == b + 1:
            interleave_rest()
            out.extend(S2)
        elif S2:
            take_tail_of_s2()
        elif i < len(qs):
            out.extend(qs[i])
            i, a = i + 1, a - 1
    elif not S2:
        take_vertices(0)
        if a == b:
            interleave_rest()
            out.extend(S1)
    else:
        take_vertices(1)
        if a == b + 1:
            interleave_rest()
            out.extend(S2 + S1)
        else:
            take_tail_of_s2()
    used_l: set[int] = set()
    if a != 0:
        if at_root:
            while i < len(qs) and d > 0:
                z = s2.L[d - 1]
                out.extend(qs[i])
                out.append(z)
                used_l.add(z)
                i, a, d = i + 1, a - 1, d - 1
        if S1:
            out.extend(S1)
        elif i < len(qs):
            out.extend(qs[i])
            i, a = i + 1, a - 1
    rest = tuple(tuple(q) for q in qs[i:])
    return SteinerDPState(tuple(out), rest, tuple(v for v in L if v not in used_l))


def strict_states(root: Node, xs: frozenset[int], trace: list | None = None) -> SteinerDPState:
    states: dict[int, SteinerDPState] = {}
    for x in postorder(root):
        if x.is_leaf:
            v = x.vertex
            st = SteinerDPState((v,), (), ()) if v in xs else SteinerDPState((), (), (v,))
        else:
            s1, s2 = (states.pop(id(c)) for c in x.children)
            if x.label == JOIN:
                st = _strict_join(s1, s2, x is root)
            else:
                st = _strict_union(s1, s2)
        states[id(x)] = st
        if trace is not None:
            trace.append((x, st))
    return states[id(root)]


def _strict_root_children(pt: ParseTree, xs: frozenset[int]):
    c1, c2 = pt.root.children
    s1, s2 = strict_states(c1, xs), strict_states(c2, xs)
    if len(s2.U) > len(s1.U):
        s1, s2, c1, c2 = s2, s1, c2, c1
    return s1, s2, c2.size


# ---------------------------------------------------------------- public API


def steiner_path(
    g: Graph, pt: ParseTree, terminals, strict: bool = False
) -> list[int] | None:
    """A simple path through every terminal using the fewest non-terminals.

    Returns None when no such path exists.
    """
    xs = _prepare(g, pt, terminals)
    if strict:
        st = strict_states(pt.root, xs)
        return orient(list(st.S)) if not st.U else None
    tables, _ = _tables(pt.root, xs)
    best = tables[id(pt.root)].best
    y = next((y for y, p in enumerate(best) if p <= 1), None)
    if y is None:
        return None
    keep = _chosen_vertices(pt.root, tables, y)
    sub = restrict(pt.root, keep)
    p, u = path_dp(sub)
    assert not u and len(p) == len(xs) + y
    return orient(p)


def steiner_path_exists(g: Graph, pt: ParseTree, terminals, strict: bool = False) -> bool:
    """Whether some simple path contains every terminal.

    ``strict=True`` evaluates ``|U1| <= |G2|`` on the strict root
    children states instead.
    """
    xs = _prepare(g, pt, terminals)
    if strict:
        if pt.root.is_leaf:
            return True
        s1, _, g2 = _strict_root_children(pt, xs)
        return len(s1.U) <= g2
    return min_extra_vertices(g, pt, xs) is not None


def steiner_cycle_exists(g: Graph, pt: ParseTree, terminals, strict: bool = False) -> bool:
    """Whether some cycle contains every terminal (needs ``n >= 3``).

    ``strict=True`` evaluates ``|U1| <= |G2| - 1`` on the strict root
    children states instead.
    """
    if g.n < 3:
        raise TooSmall("a cycle needs at least three vertices")
    xs = _prepare(g, pt, terminals)
    if strict:
        s1, _, g2 = _strict_root_children(pt, xs)
        return len(s1.U) <= g2 - 1
    _, cycle = _tables(pt.root, xs, want_cycle=True)
    return cycle

"""Exhaustive oracle-equivalence suites.

Every suite walks the cographs produced by ``enumerate_cotrees`` (plus
sampled non-cographs for recognition), runs the library routine and the
brute-force oracle, and counts disagreements. Suites tagged ``reference``
exercise the ``strict`` variants; their disagreements are reported
but do not fail the run. Output is deterministic: seeds are derived from
instance identifiers, and no timing enters the report.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from . import oracle
from .augment_edge import augment_edge, augment_edge_weighted
from .augment_vertex import augment_vertex, augment_vertex_weighted
from .cotree import JOIN, Cotree, binarize, decompose, enumerate_cotrees, realize
from .errors import InputError, NotCograph
from .graph import Graph, WeightMap, complement, connected_components, induced_subgraph
from .io import GraphDocument
from .longest_path import hamiltonian_cycle_exists, hamiltonian_path_exists, longest_path
from .mlst import leaf_count, min_leaf_spanning_tree
from .separators import (
    min_connected_vertex_separator,
    min_stable_vertex_separator,
    minimal_vertex_separators,
)
from .steiner import min_extra_vertices, steiner_cycle_exists, steiner_path, steiner_path_exists

MAX_DUMPS = 3
# graphs per order drawn at random for the recognition suite (orders 6 and 7)
RECOGNITION_SAMPLES = 5009


@dataclass
class SuiteResult:
    name: str
    max_n: int
    instances: int = 0
    disagreements: int = 0
    reference: bool = False
    counterexamples: list[dict[str, Any]] = field(default_factory=list)

    def fail(self, g: Graph, **detail: Any) -> None:
        self.disagreements += 1
        if len(self.counterexamples) < MAX_DUMPS:
            self.counterexamples.append({"graph": GraphDocument.from_graph(g).to_dict(), **detail})

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.name,
            "max_n": self.max_n,
            "reference": self.reference,
            "instances": self.instances,
            "disagreements": self.disagreements,
            "counterexamples": self.counterexamples,
        }


def cographs(max_n: int, connected: bool = False, min_n: int = 1) -> Iterator[tuple[Cotree, Graph]]:
    for n in range(min_n, max_n + 1):
        for t in enumerate_cotrees(n):
            if connected and not t.root.is_leaf and t.root.label != JOIN:
                continue
            yield t, realize(t)


def _rng(*key: Any) -> random.Random:
    return random.Random(":".join(map(str, key)))


def random_weights(g: Graph, rng: random.Random) -> WeightMap:
    return WeightMap({e: rng.randint(1, 9) for e in g.non_edges()})


def _valid_path(g: Graph, p: list[int]) -> bool:
    return len(set(p)) == len(p) and all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


# ---------------------------------------------------------------- suites


def suite_cotree(max_n: int, samples: int = RECOGNITION_SAMPLES) -> SuiteResult:
    """Round trip on canonical cotrees, and recognition against the P4 scan."""
    res = SuiteResult("cotree", min(max_n, 8))
    for t, g in cographs(min(max_n, 8)):
        res.instances += 1
        if decompose(g) != t:
            res.fail(g, check="round-trip")
    for n in range(1, min(max_n, 5) + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            res.instances += 1
            _check_recognition(res, g)
    for n in range(6, min(max_n, 7) + 1):
        rng = _rng("recognition", n)
        pairs = list(itertools.combinations(range(n), 2))
        for _ in range(samples):
            g = Graph.from_edges(n, [p for p in pairs if rng.random() < 0.5])
            res.instances += 1
            _check_recognition(res, g)
    return res


def _check_recognition(res: SuiteResult, g: Graph) -> None:
    try:
        t = decompose(g)
        ok = not oracle.has_induced_p4(g) and realize(t) == g
    except NotCograph:
        ok = oracle.has_induced_p4(g)
    if not ok:
        res.fail(g, check="recognition")


def separator_violations(g: Graph, s: frozenset[int]) -> list[str]:
    """Structural facts every minimal separator of a cograph satisfies."""
    out = []
    rest = [v for v in range(g.n) if v not in s]
    if len(connected_components(g, rest)) < 2:
        out.append("removal leaves the graph connected")
    if not all(g.has_edge(x, y) for x in s for y in rest):
        out.append("separator vertex not universal to the rest")
    for u in rest:
        for v in g.adj[u]:
            if v in s or v < u:
                continue
            if g.adj[u] & s != g.adj[v] & s:
                out.append("edge endpoints see different separator vertices")
    return out


def suite_separators(max_n: int) -> SuiteResult:
    res = SuiteResult("separators", min(max_n, 10))
    for t, g in cographs(min(max_n, 10), connected=True):
        res.instances += 1
        got = sorted((s.vertices for s in minimal_vertex_separators(g, t)), key=sorted)
        if got != oracle.brute_minimal_separators(g):
            res.fail(g, check="minimal", got=[sorted(s) for s in got])
        for s in got:
            bad = separator_violations(g, s)
            if bad:
                res.fail(g, check="structure", separator=sorted(s), violations=bad)
        for kind, fn, brute in (
            ("connected", min_connected_vertex_separator, oracle.brute_min_connected_separator),
            ("stable", min_stable_vertex_separator, oracle.brute_min_stable_separator),
        ):
            want = brute(g)
            got_all = fn(g, t, return_all=True)
            got_all = [] if got_all is None else [x.vertices for x in got_all]
            if sorted(got_all, key=sorted) != want:
                res.fail(g, check=kind, got=[sorted(x) for x in got_all], want=[sorted(x) for x in want])
    return res


def suite_augment_vertex(max_n: int, strict: bool = False) -> SuiteResult:
    res = SuiteResult("augment-vertex-strict" if strict else "augment-vertex", min(max_n, 6), reference=strict)
    for idx, (t, g) in enumerate(cographs(min(max_n, 6), connected=True, min_n=2)):
        if g.is_complete():
            continue
        res.instances += 1
        k = oracle.brute_connectivity(g, "vertex")
        if not strict:
            aug, h = augment_vertex(g, t)
            want = oracle.brute_min_augmentation(g, "vertex", True)
            ok = _is_cograph(h) and oracle.brute_connectivity(h, "vertex") == k + 1
            if not ok or want is None or len(aug) != want[0]:
                res.fail(g, check="unweighted", edges=[list(e) for e in aug.edges])
        for draw in range(3):
            w = random_weights(g, _rng("augment-vertex", idx, draw))
            aug, h = augment_vertex_weighted(g, t, w, strict=strict)
            want = oracle.brute_min_augmentation(g, "vertex", True, w)
            # a cheaper split may overshoot k + 1, which the target allows
            ok = _is_cograph(h) and oracle.brute_connectivity(h, "vertex") >= k + 1
            if not ok or want is None or aug.total_weight != want[0]:
                res.fail(
                    g,
                    check="weighted",
                    weights=[[u, v, w[(u, v)]] for u, v in sorted(w)],
                    got=aug.total_weight,
                    want=None if want is None else want[0],
                )
    return res


def _is_cograph(g: Graph) -> bool:
    try:
        decompose(g)
    except NotCograph:
        return False
    return True


def suite_augment_edge(max_n: int, strict: bool = False) -> SuiteResult:
    res = SuiteResult("augment-edge-strict" if strict else "augment-edge", min(max_n, 7), reference=strict)
    for idx, (t, g) in enumerate(cographs(min(max_n, 7), connected=True, min_n=2)):
        if g.min_degree() == g.n - 1:
            continue
        res.instances += 1
        k = g.min_degree()
        if not strict:
            aug, h = augment_edge(g)
            x = [v for v in range(g.n) if g.degree(v) == k]
            sub, _ = induced_subgraph(complement(g), x)
            bound = len(x) - oracle.brute_max_matching(sub)
            ok = h.min_degree() == k + 1 and oracle.brute_connectivity(h, "edge") == k + 1
            if not ok or len(aug) != bound:
                res.fail(g, check="unweighted", edges=[list(e) for e in aug.edges], want=bound)
        if g.n > 6:
            continue
        for draw in range(3):
            w = random_weights(g, _rng("augment-edge", idx, draw))
            aug, h = augment_edge_weighted(g, w, strict=strict)
            want = oracle.brute_min_augmentation(g, "edge", False, w)
            ok = oracle.brute_connectivity(h, "edge") >= k + 1
            if not ok or want is None or aug.total_weight != want[0]:
                res.fail(
                    g,
                    check="weighted",
                    weights=[[u, v, w[(u, v)]] for u, v in sorted(w)],
                    got=aug.total_weight,
                    want=None if want is None else want[0],
                )
    return res


def suite_longest_path(max_n: int) -> SuiteResult:
    res = SuiteResult("longest-path", min(max_n, 8))
    for t, g in cographs(min(max_n, 8)):
        res.instances += 1
        pt = binarize(t)
        p = longest_path(g, pt)
        if len(p) != oracle.brute_longest_path(g) or not _valid_path(g, p):
            res.fail(g, check="longest", got=p)
        if g.n > 1 and t.root.label != JOIN:
            continue
        ok, w = hamiltonian_path_exists(g, pt)
        if ok != oracle.brute_hamiltonian_path(g) or (ok and (len(w) != g.n or not _valid_path(g, w))):
            res.fail(g, check="hamiltonian-path", got=ok)
        if g.n >= 3 and hamiltonian_cycle_exists(g, pt) != oracle.brute_hamiltonian_cycle(g):
            res.fail(g, check="hamiltonian-cycle")
    return res


def suite_steiner(max_n: int, strict: bool = False) -> SuiteResult:
    res = SuiteResult("steiner-strict" if strict else "steiner", min(max_n, 7), reference=strict)
    for t, g in cographs(min(max_n, 7), connected=True):
        pt = binarize(t)
        for r in range(1, g.n + 1):
            for xs in itertools.combinations(range(g.n), r):
                res.instances += 1
                want = oracle.brute_steiner_path(g, xs)
                p = steiner_path(g, pt, xs, strict=strict)
                ok = (p is None) == (want is None)
                if ok and p is not None:
                    ok = _valid_path(g, p) and set(xs) <= set(p) and len(p) - len(xs) == want
                if ok and not strict:
                    ok = min_extra_vertices(g, pt, xs) == want
                ok = ok and steiner_path_exists(g, pt, xs, strict=strict) == (want is not None)
                if not ok:
                    res.fail(g, check="path", terminals=list(xs), got=p, want=want)
                if 3 <= g.n <= min(max_n, 6):
                    c = oracle.brute_steiner_cycle(g, xs)
                    if steiner_cycle_exists(g, pt, xs, strict=strict) != c:
                        res.fail(g, check="cycle", terminals=list(xs), want=c)
    return res


def suite_mlst(max_n: int) -> SuiteResult:
    res = SuiteResult("mlst", min(max_n, 7))
    for t, g in cographs(min(max_n, 7), connected=True, min_n=2):
        res.instances += 1
        st = min_leaf_spanning_tree(g, binarize(t))
        tree = Graph.from_edges(g.n, st.edges)
        ok = (
            len(st.edges) == g.n - 1
            and tree.is_connected()
            and all(g.has_edge(*e) for e in st.edges)
            and leaf_count(st) == oracle.brute_mlst_leaves(g)
        )
        if not ok:
            res.fail(g, check="mlst", edges=[list(e) for e in st.edges])
    return res


SUITES: dict[str, list[Callable[[int], SuiteResult]]] = {
    "cotree": [suite_cotree],
    "separators": [suite_separators],
    "augment-vertex": [suite_augment_vertex, lambda n: suite_augment_vertex(n, strict=True)],
    "augment-edge": [suite_augment_edge, lambda n: suite_augment_edge(n, strict=True)],
    "longest-path": [suite_longest_path],
    "steiner": [suite_steiner, lambda n: suite_steiner(n, strict=True)],
    "mlst": [suite_mlst],
}
ALIASES = {"steiner-path": "steiner", "cotrees": "cotree", "separator": "separators"}


def verify(scope: str, max_n: int) -> dict[str, Any]:
    """Run one suite family (or ``all``) up to ``max_n`` vertices."""
    scope = ALIASES.get(scope, scope)
    if scope != "all" and scope not in SUITES:
        raise InputError(f"unknown scope {scope!r}; choose from all, {', '.join(SUITES)}")
    if max_n < 1:
        raise InputError("max_n must be at least 1")
    names = list(SUITES) if scope == "all" else [scope]
    suites = [fn(max_n).to_dict() for name in names for fn in SUITES[name]]
    failing = sum(s["disagreements"] for s in suites if not s["reference"])
    return {
        "scope": scope,
        "max_n": max_n,
        "passed": failing == 0,
        "disagreements": failing,
        "suites": suites,
    }

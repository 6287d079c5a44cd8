"""Command-line entry point.

Every command reads one graph (JSON document or plain edge list) from a
path or standard input and prints a result document. Exit codes:
0 ok, 2 not a cograph, 3 infeasible, 4 bad input, 5 instance too large.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Callable, Sequence

from .augment_edge import augment_edge, augment_edge_weighted
from .augment_vertex import augment_vertex, augment_vertex_weighted
from .bench import ALGORITHMS, BenchConfig, run_bench
from .cotree import JOIN, binarize, decompose, random_cograph, realize
from .errors import (
    CographError,
    CompleteGraph,
    Disconnected,
    EmptyTerminals,
    InputError,
    InstanceTooLarge,
    IsolatedVertex,
    MissingWeight,
    NotCograph,
    TooSmall,
    TreeMismatch,
)
from .io import GraphDocument, ResultDocument, digest, dumps, parse_graph, serialize_graph, tree_to_json
from .longest_path import hamiltonian_cycle_exists, hamiltonian_path_exists, longest_path
from .mlst import leaf_count, min_leaf_spanning_tree
from .separators import (
    min_connected_vertex_separator,
    min_stable_vertex_separator,
    minimal_vertex_separators,
    vertex_connectivity_from_cotree,
)
from .steiner import min_extra_vertices, steiner_cycle_exists, steiner_path
from .verify import verify

EXIT_OK = 0
EXIT_NOT_COGRAPH = 2
EXIT_INFEASIBLE = 3
EXIT_INPUT = 4
EXIT_TOO_LARGE = 5

EXIT_FOR_ERROR: dict[type, int] = {
    NotCograph: EXIT_NOT_COGRAPH,
    CompleteGraph: EXIT_INFEASIBLE,
    InstanceTooLarge: EXIT_TOO_LARGE,
    Disconnected: EXIT_INPUT,
    TooSmall: EXIT_INPUT,
    MissingWeight: EXIT_INPUT,
    EmptyTerminals: EXIT_INPUT,
    IsolatedVertex: EXIT_INPUT,
    TreeMismatch: EXIT_INPUT,
    InputError: EXIT_INPUT,
}


class Infeasible(Exception):
    """Carries a result that exists but reports no solution (exit 3)."""

    def __init__(self, result: Any):
        super().__init__("infeasible")
        self.result = result


# ---------------------------------------------------------------- commands


def _edges(es) -> list[list[int]]:
    return [list(e) for e in es]


def cmd_cotree(doc: GraphDocument, args) -> Any:
    t = decompose(doc.graph())
    return {"vertices": doc.n, "cotree": tree_to_json(t)}


def cmd_mvs(doc: GraphDocument, args) -> Any:
    g = doc.graph()
    t = decompose(g)
    seps = minimal_vertex_separators(g, t)
    return {"connectivity": vertex_connectivity_from_cotree(t), "separators": [s.sorted() for s in seps]}


def _constrained(fn: Callable) -> Callable:
    def run(doc: GraphDocument, args) -> Any:
        g = doc.graph()
        t = decompose(g)
        found = fn(g, t, return_all=args.all)
        if not found:
            raise Infeasible({"separator": None})
        if args.all:
            return {"separators": [s.sorted() for s in found]}
        return {"separator": found.sorted()}

    return run


def cmd_augment(doc: GraphDocument, args) -> Any:
    g = doc.graph()
    t = decompose(g)
    if args.weighted:
        if doc.weights is None:
            raise MissingWeight("--weighted needs a weights block")
        w = doc.weight_map()
        missing = [list(e) for e in g.non_edges() if e not in w]
        if missing:
            raise MissingWeight(f"no weight for complement edges {missing[:5]}")
    if args.kind == "vertex":
        if args.weighted:
            aug, _ = augment_vertex_weighted(g, t, w, strict=args.strict)
        else:
            aug, _ = augment_vertex(g, t)
    elif args.weighted:
        aug, _ = augment_edge_weighted(g, w, strict=args.strict)
    else:
        aug, _ = augment_edge(g)
    return {
        "kind": args.kind,
        "weighted": args.weighted,
        "edges": _edges(aug.edges),
        "size": len(aug.edges),
        "total_weight": aug.total_weight if args.weighted else len(aug.edges),
    }


def _parse_tree(doc: GraphDocument):
    g = doc.graph()
    return g, binarize(decompose(g))


def cmd_longest_path(doc: GraphDocument, args) -> Any:
    g, pt = _parse_tree(doc)
    p = longest_path(g, pt)
    return {"path": p, "length": len(p)}


def cmd_hamiltonian_path(doc: GraphDocument, args) -> Any:
    g, pt = _parse_tree(doc)
    ok, p = hamiltonian_path_exists(g, pt)
    res = {"exists": ok, "path": p}
    if not ok:
        raise Infeasible(res)
    return res


def cmd_hamiltonian_cycle(doc: GraphDocument, args) -> Any:
    g, pt = _parse_tree(doc)
    ok = hamiltonian_cycle_exists(g, pt)
    if not ok:
        raise Infeasible({"exists": False})
    return {"exists": True}


def _terminals(args, n: int) -> list[int]:
    if args.terminals is None:
        raise EmptyTerminals("--terminals is required")
    try:
        xs = sorted({int(x) for x in args.terminals.split(",") if x.strip()})
    except ValueError:
        raise InputError(f"bad terminal list {args.terminals!r}") from None
    if not xs:
        raise EmptyTerminals("terminal set is empty")
    return xs


def cmd_steiner_path(doc: GraphDocument, args) -> Any:
    g, pt = _parse_tree(doc)
    xs = _terminals(args, g.n)
    p = steiner_path(g, pt, xs, strict=args.strict)
    if p is None:
        raise Infeasible({"terminals": xs, "exists": False, "path": None})
    extra = len(p) - len(xs) if args.strict else min_extra_vertices(g, pt, xs)
    return {"terminals": xs, "exists": True, "path": p, "extra_vertices": extra}


def cmd_steiner_cycle(doc: GraphDocument, args) -> Any:
    g, pt = _parse_tree(doc)
    xs = _terminals(args, g.n)
    ok = steiner_cycle_exists(g, pt, xs, strict=args.strict)
    if not ok:
        raise Infeasible({"terminals": xs, "exists": False})
    return {"terminals": xs, "exists": True}


def cmd_mlst(doc: GraphDocument, args) -> Any:
    g, pt = _parse_tree(doc)
    st = min_leaf_spanning_tree(g, pt)
    return {"edges": _edges(st.edges), "leaves": leaf_count(st)}


GRAPH_COMMANDS: dict[str, Callable[[GraphDocument, argparse.Namespace], Any]] = {
    "cotree": cmd_cotree,
    "mvs": cmd_mvs,
    "connected-separator": _constrained(min_connected_vertex_separator),
    "stable-separator": _constrained(min_stable_vertex_separator),
    "augment": cmd_augment,
    "longest-path": cmd_longest_path,
    "hamiltonian-path": cmd_hamiltonian_path,
    "hamiltonian-cycle": cmd_hamiltonian_cycle,
    "steiner-path": cmd_steiner_path,
    "steiner-cycle": cmd_steiner_cycle,
    "mlst": cmd_mlst,
}


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cographs", description="Cograph algorithms with brute-force checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-timing", action="store_true", help="emit timing as null")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help_text: str, where=sub) -> argparse.ArgumentParser:
        sp = where.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("input", nargs="?", default="-", help="graph file (JSON or edge list); '-' for stdin")
        return sp

    graph_cmd("cotree", "canonical cotree")
    graph_cmd("mvs", "all minimal vertex separators")
    for name in ("connected-separator", "stable-separator"):
        graph_cmd(name, f"minimum {name.split('-')[0]} vertex separator").add_argument(
            "--all", action="store_true", help="return every minimum witness"
        )
    kinds = sub.add_parser("augment", help="raise vertex or edge connectivity by one").add_subparsers(
        dest="kind", required=True
    )
    for kind in ("vertex", "edge"):
        sp = graph_cmd(kind, f"{kind} connectivity augmentation", where=kinds)
        sp.add_argument("--weighted", action="store_true")
        sp.add_argument("--strict", action="store_true", help="use the single-split / per-component recipe")
    graph_cmd("longest-path", "a longest path")
    graph_cmd("hamiltonian-path", "Hamiltonian path decision and witness")
    graph_cmd("hamiltonian-cycle", "Hamiltonian cycle decision")
    for name in ("steiner-path", "steiner-cycle"):
        sp = graph_cmd(name, f"{name.replace('-', ' ').capitalize()} through the terminals")
        sp.add_argument("--terminals", required=True, help="comma-separated vertex ids")
        sp.add_argument("--strict", action="store_true", help="root-only non-terminal injection")
    graph_cmd("mlst", "minimum-leaf spanning tree")

    sp = sub.add_parser("verify", parents=[common], help="oracle equivalence suites")
    sp.add_argument("scope", nargs="?", default="all")
    sp.add_argument("max_n", nargs="?", type=int, default=6)

    sp = sub.add_parser("bench", parents=[common], help="median timings on random cographs")
    sp.add_argument("algorithm", choices=ALGORITHMS)
    sp.add_argument("--sizes", default="10000,100000", help="comma-separated vertex counts")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--repeats", type=int, default=5)

    sp = sub.add_parser("gen", help="random connected cograph as a graph document")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    return p


def _read_input(path: str) -> GraphDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def _emit(command: str, input_digest: str | None, result: Any, seconds: float, no_timing: bool) -> None:
    timing = None if no_timing else {"seconds": round(seconds, 6)}
    sys.stdout.write(dumps(ResultDocument(command, input_digest, result, timing).to_dict()))


def _diagnose(exc: BaseException, code: int) -> int:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc), "exit_code": code}) + "\n")
    return code


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which would collide with NotCograph
        return EXIT_INPUT if exc.code else EXIT_OK
    name = args.command
    try:
        if name == "gen":
            if args.n < 1:
                raise InputError("--n must be positive")
            g = realize(random_cograph(args.n, args.seed, root_label=JOIN))
            sys.stdout.write(serialize_graph(GraphDocument.from_graph(g)))
            return EXIT_OK
        t0 = time.perf_counter()
        if name == "verify":
            result = verify(args.scope, args.max_n)
            _emit(name, None, result, time.perf_counter() - t0, args.no_timing)
            return EXIT_OK
        if name == "bench":
            try:
                sizes = tuple(int(s) for s in args.sizes.split(","))
            except ValueError:
                raise InputError(f"bad size list {args.sizes!r}") from None
            result = run_bench(BenchConfig(args.algorithm, sizes, args.seed, args.repeats))
            _emit(name, None, result, time.perf_counter() - t0, args.no_timing)
            return EXIT_OK
        doc = _read_input(args.input)
        label = f"augment {args.kind}" if name == "augment" else name
        t0 = time.perf_counter()
        try:
            result = GRAPH_COMMANDS[name](doc, args)
            code = EXIT_OK
        except Infeasible as inf:
            result, code = inf.result, EXIT_INFEASIBLE
        _emit(label, digest(doc), result, time.perf_counter() - t0, args.no_timing)
        return code
    except CographError as exc:
        return _diagnose(exc, EXIT_FOR_ERROR.get(type(exc), EXIT_INPUT))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

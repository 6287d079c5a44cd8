"""Graph and result documents (JSON) plus a plain edge-list reader."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from .cotree import Cotree, Node, postorder
from .errors import InputError
from .graph import Graph, WeightMap, canon


@dataclass(frozen=True)
class GraphDocument:
    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None
    weights: tuple[tuple[int, int, float], ...] | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise InputError("n must be a positive integer")
        seen = set()
        for e in self.edges:
            u, v = _pair(e, self.n, "edge")
            if u == v:
                raise InputError(f"self-loop at {u}")
            if canon(u, v) in seen:
                raise InputError(f"duplicate edge {canon(u, v)}")
            seen.add(canon(u, v))
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError(f"expected {self.n} labels, got {len(self.labels)}")
        if self.weights is not None:
            wseen = set()
            for t in self.weights:
                if len(t) != 3:
                    raise InputError(f"weight entry must be [u, v, w]: {list(t)}")
                u, v = _pair(t[:2], self.n, "weight")
                e = canon(u, v)
                if u == v or e in seen:
                    raise InputError(f"weight given for non-complement pair {e}")
                if e in wseen:
                    raise InputError(f"duplicate weight for {e}")
                wseen.add(e)

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)

    def weight_map(self) -> WeightMap:
        if self.weights is None:
            raise InputError("document has no weights block")
        return WeightMap(self.weights)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        if self.weights is not None:
            out["weights"] = [list(t) for t in self.weights]
        return out

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> GraphDocument:
        if not isinstance(d, dict) or "n" not in d or "edges" not in d:
            raise InputError("graph document needs 'n' and 'edges'")
        extra = set(d) - {"n", "edges", "labels", "weights"}
        if extra:
            raise InputError(f"unknown fields: {sorted(extra)}")
        labels = d.get("labels")
        weights = d.get("weights")
        return cls(
            d["n"],
            tuple(tuple(e) for e in d["edges"]),
            None if labels is None else tuple(str(x) for x in labels),
            None if weights is None else tuple(tuple(t) for t in weights),
        )

    @classmethod
    def from_graph(cls, g: Graph, weights: WeightMap | None = None) -> GraphDocument:
        w = None if weights is None else tuple((u, v, weights[(u, v)]) for u, v in sorted(weights))
        return cls(g.n, tuple(g.edges()), None, w)


def _pair(e, n: int, what: str) -> tuple[int, int]:
    if len(e) != 2:
        raise InputError(f"{what} must be a pair: {list(e)}")
    u, v = e
    for x in (u, v):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
            raise InputError(f"{what} endpoint {x!r} outside 0..{n - 1}")
    return u, v


def dumps(obj: Any) -> str:
    """Canonical text: dicts indented two spaces in insertion order, dict-free lists on one line."""
    return _render(obj, 0) + "\n"


def _render(obj: Any, depth: int) -> str:
    pad = "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        body = ",\n".join(f"{pad}{json.dumps(str(k))}: {_render(v, depth + 1)}" for k, v in obj.items())
        return "{\n" + body + "\n" + "  " * depth + "}"
    if isinstance(obj, (list, tuple)):
        if not any(isinstance(x, dict) for x in obj):
            return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))
        body = ",\n".join(pad + _render(x, depth + 1) for x in obj)
        return "[\n" + body + "\n" + "  " * depth + "]"
    return json.dumps(obj, ensure_ascii=False)


def serialize_graph(doc: GraphDocument) -> str:
    return dumps(doc.to_dict())


def read_edge_list(text: str) -> GraphDocument:
    """First non-comment line ``n``, then one ``u v`` pair per line; ``#`` starts a comment."""
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 1:
        raise InputError("edge list must start with a line holding n")
    edges = []
    for r in rows[1:]:
        if len(r) != 2:
            raise InputError(f"edge-list line must hold two vertices: {' '.join(r)}")
        edges.append(r)
    try:
        return GraphDocument(int(rows[0][0]), tuple((int(u), int(v)) for u, v in edges))
    except ValueError as exc:
        raise InputError(f"bad edge list: {exc}") from None


def parse_graph(text: str) -> GraphDocument:
    """JSON document if the text starts with ``{``, edge list otherwise."""
    s = text.lstrip()
    if s.startswith("{"):
        try:
            return GraphDocument.from_dict(json.loads(s))
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
    return read_edge_list(text)


def digest(doc: GraphDocument) -> str:
    return "sha256:" + hashlib.sha256(json.dumps(doc.to_dict(), separators=(",", ":")).encode()).hexdigest()


@dataclass(frozen=True)
class ResultDocument:
    command: str
    input_digest: str | None
    result: Any
    timing: dict[str, float] | None = field(default=None)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "input_digest": self.input_digest,
            "result": self.result,
            "timing": self.timing,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> ResultDocument:
        try:
            return cls(d["command"], d["input_digest"], d["result"], d.get("timing"))
        except (KeyError, TypeError):
            raise InputError("result document needs command, input_digest and result") from None


def serialize_result(doc: ResultDocument) -> str:
    return dumps(doc.to_dict())


def parse_result(text: str) -> ResultDocument:
    return ResultDocument.from_dict(json.loads(text))


def tree_to_json(node: Node | Cotree) -> Any:
    """Leaf -> vertex id, internal -> ``[label, [children]]``."""
    if isinstance(node, Cotree):
        node = node.root
    if node.is_leaf:
        return node.vertex
    out: dict[int, Any] = {}
    for x in postorder(node):
        if x.is_leaf:
            out[id(x)] = x.vertex
        else:
            out[id(x)] = [x.label, [out.pop(id(c)) for c in x.children]]
    return out[id(node)]

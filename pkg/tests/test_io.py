import json

import pytest
from hypothesis import given, strategies as st

from cographs.cotree import random_cograph, realize
from cographs.errors import InputError
from cographs.graph import WeightMap
from cographs.io import (
    GraphDocument,
    ResultDocument,
    digest,
    dumps,
    parse_graph,
    parse_result,
    read_edge_list,
    serialize_graph,
    serialize_result,
    tree_to_json,
)
from cographs.cotree import decompose

from conftest import C4


@given(st.integers(1, 15), st.integers(0, 10**6))
def test_graph_document_round_trip(n, seed):
    g = realize(random_cograph(n, seed))
    w = WeightMap({e: i + 1 for i, e in enumerate(g.non_edges())})
    doc = GraphDocument.from_graph(g, w)
    back = parse_graph(serialize_graph(doc))
    assert back == doc and back.graph() == g
    assert dict(back.weight_map()) == dict(w)
    assert digest(back) == digest(doc)


def test_result_round_trip():
    doc = ResultDocument("mvs", "sha256:00", {"separators": [[1, 3], [0, 2]]}, None)
    text = serialize_result(doc)
    assert parse_result(text) == doc
    assert '"separators": [[1, 3], [0, 2]]' in text


def test_dumps_layout():
    assert dumps({"a": [1, [2]], "b": {}}) == '{\n  "a": [1, [2]],\n  "b": {}\n}\n'
    assert json.loads(dumps({"rows": [{"n": 1}]})) == {"rows": [{"n": 1}]}


def test_edge_list_reader():
    doc = read_edge_list("# C4\n4\n0 1\n1 2  # side\n2 3\n3 0\n")
    assert doc.graph() == C4
    assert parse_graph("4\n0 1\n1 2\n2 3\n0 3\n").graph() == C4


@pytest.mark.parametrize(
    "text",
    [
        '{"n": 0, "edges": []}',
        '{"n": 2, "edges": [[0, 0]]}',
        '{"n": 2, "edges": [[0, 1], [1, 0]]}',
        '{"n": 2, "edges": [[0, 2]]}',
        '{"n": 2, "edges": [], "labels": ["a"]}',
        '{"n": 2, "edges": [[0, 1]], "weights": [[0, 1, 3]]}',
        '{"n": 2, "edges": [], "extra": 1}',
        '{"n": 2, "edges": [}',
        "x\n",
        "3\n0 1 2\n",
    ],
)
def test_rejects_bad_input(text):
    with pytest.raises(InputError):
        parse_graph(text)


def test_tree_to_json():
    assert tree_to_json(decompose(C4)) == [1, [[0, [0, 2]], [0, [1, 3]]]]

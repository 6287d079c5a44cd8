import json

import pytest

from cographs.cli import run
from cographs.io import GraphDocument, serialize_graph

from conftest import C4, K4, P4, STAR


@pytest.fixture
def write(tmp_path):
    def _write(g, name="g.json", weights=None):
        p = tmp_path / name
        doc = GraphDocument.from_graph(g)
        if weights is not None:
            doc = GraphDocument(doc.n, doc.edges, None, weights)
        p.write_text(serialize_graph(doc))
        return str(p)

    return _write


def _out(capsys):
    return json.loads(capsys.readouterr().out)


def test_mvs_on_c4(write, capsys):
    assert run(["mvs", write(C4)]) == 0
    doc = _out(capsys)
    assert doc["command"] == "mvs"
    assert doc["result"]["separators"] == [[1, 3], [0, 2]]
    assert doc["input_digest"].startswith("sha256:")


def test_cotree_on_p4_exits_2(write, capsys):
    assert run(["cotree", write(P4)]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "NotCograph" and err["exit_code"] == 2


def test_hamiltonian_path_on_star_exits_3(write, capsys):
    assert run(["hamiltonian-path", write(STAR)]) == 3
    assert _out(capsys)["result"]["exists"] is False


def test_other_commands(write, capsys):
    c4 = write(C4)
    assert run(["augment", "vertex", c4]) == 0
    assert _out(capsys)["result"]["edges"] == [[0, 2], [1, 3]]
    assert run(["augment", "edge", "--weighted", write(C4, "w.json", ((0, 2, 3), (1, 3, 4))), "--no-timing"]) == 0
    res = _out(capsys)
    assert res["result"]["total_weight"] == 7 and res["timing"] is None
    assert run(["steiner-path", write(STAR, "s.json"), "--terminals", "1,3"]) == 0
    assert _out(capsys)["result"]["path"] == [1, 0, 3]
    assert run(["mlst", c4]) == 0
    capsys.readouterr()
    assert run(["augment", "vertex", write(K4, "k.json")]) == 3


def test_input_errors(tmp_path, write, capsys):
    assert run(["mvs", str(tmp_path / "missing.json")]) == 4
    assert run(["augment", "vertex", "--weighted", write(C4)]) == 4
    assert run(["no-such-command"]) == 4
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "edges": [[0, 5]]}')
    assert run(["cotree", str(bad)]) == 4


def test_verify_clamps_to_oracle_caps(capsys):
    assert run(["verify", "longest-path", "40", "--no-timing"]) == 0
    assert _out(capsys)["result"]["suites"][0]["max_n"] == 8


def test_weighted_bench_size_limit(capsys):
    assert run(["bench", "augment-vertex-weighted", "--sizes", "5000"]) == 5


def test_gen_output_is_a_document(capsys):
    assert run(["gen", "--n", "9", "--seed", "3"]) == 0
    doc = GraphDocument.from_dict(json.loads(capsys.readouterr().out))
    assert doc.n == 9

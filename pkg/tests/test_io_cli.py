"""Serialization round-trips, DOT output and the CLI surface."""

import json

import pytest

from mtour.cli import main
from mtour.cycles import CycleWitness
from mtour.digraph import build
from mtour.errors import DoubleArc, ParseError
from mtour.families import QSpec, gen_Q
from mtour.formats import from_json, to_dot, to_json


def triangle():
    return build([[0], [1], [2]], [(0, 1), (1, 2), (2, 0)])


# -- JSON ------------------------------------------------------------------


def test_json_round_trip_triangle():
    text = to_json(triangle())
    doc = json.loads(text)
    assert doc["c"] == 3 and len(doc["parts"]) == 3 and len(doc["arcs"]) == 3
    assert from_json(text) == triangle()


def test_json_round_trip_q_member_bit_exact():
    D = gen_Q(QSpec(c=8, m=18, s=3, t=6, blowup={1: 2, 2: 2, 17: 2, 18: 2}))
    assert from_json(to_json(D)) == D
    # serialization is deterministic
    assert to_json(D) == to_json(from_json(to_json(D)))


def test_json_parse_errors():
    with pytest.raises(ParseError):
        from_json("not json")
    with pytest.raises(ParseError):
        from_json("[1, 2]")
    with pytest.raises(ParseError):
        from_json('{"version": "1", "c": 1, "parts": [[0]]}')
    with pytest.raises(ParseError):
        from_json('{"version": "99", "c": 1, "parts": [[0]], "arcs": []}')
    with pytest.raises(ParseError):
        from_json('{"version": "1", "c": 2, "parts": [[0], [1]], "arcs": [[0]]}')


def test_json_build_validation_applies():
    doc = {
        "version": "1",
        "c": 3,
        "parts": [[0], [1], [2]],
        "arcs": [[0, 1], [1, 0], [1, 2], [2, 0]],
    }
    with pytest.raises(DoubleArc):
        from_json(json.dumps(doc))


# -- DOT -------------------------------------------------------------------


def test_dot_output():
    text = to_dot(triangle())
    assert text.startswith("digraph D {") and text.rstrip().endswith("}")
    assert text.count("subgraph cluster_") == 3
    assert 'label="V_1";' in text
    assert "0 -> 1;" in text


def test_dot_highlight():
    text = to_dot(triangle(), highlight=CycleWitness((0, 1, 2)))
    assert "0 -> 1 [color=red, penwidth=2];" in text


# -- CLI -------------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cli_gen_and_pipeline(tmp_path, capsys):
    code, out = run_cli(
        capsys, "gen", "--family", "q", "--c", "8", "--m", "18",
        "--s", "3", "--t", "6", "--blowup", "1=2", "2=2", "17=2", "18=2",
    )
    assert code == 0
    path = tmp_path / "q.json"
    path.write_text(out)
    D = from_json(out)
    assert D.c == 8

    code, out = run_cli(capsys, "spectrum", "--input", str(path), "--qmax", "10")
    assert code == 0
    assert json.loads(out)["lengths"] == [3, 4, 5, 6, 7, 8, 9]

    code, out = run_cli(capsys, "find-cycle", "--input", str(path), "--q", "10",
                        "--mode", "oracle")
    assert code == 0
    assert json.loads(out)["cycle"] is None

    code, out = run_cli(capsys, "recognize", "--input", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "member_of_q"
    assert "correspondence" in doc

    code, out = run_cli(capsys, "verify", "--input", str(path))
    assert code == 0
    assert out.count("pass") == 4


def test_cli_gen_deterministic(capsys):
    argv = ["gen", "--family", "random", "--c", "8",
            "--sizes", "2,2,2,2,2,2,2,2", "--seed", "7"]
    _, out1 = run_cli(capsys, *argv)
    _, out2 = run_cli(capsys, *argv)
    assert out1 == out2


def test_cli_gen_dot(capsys):
    code, out = run_cli(capsys, "gen", "--family", "w", "--c", "8", "--m", "16",
                        "--blowup", "1=2", "2=2", "15=2", "16=2", "--dot")
    assert code == 0
    assert out.startswith("digraph D {")


def test_cli_gen_h(capsys):
    code, out = run_cli(capsys, "gen", "--family", "h", "--c", "8", "--i", "4",
                        "--sizes", "2,2,1,2,2,2,2,2", "--seed", "1")
    assert code == 0
    assert from_json(out).c == 8


def test_cli_error_exit_code(capsys):
    code = main(["gen", "--family", "q", "--c", "8", "--m", "18", "--s", "3", "--t", "4"])
    assert code == 1


def test_cli_fuzz_and_report(tmp_path, capsys):
    code, out = run_cli(capsys, "fuzz", "--c", "8", "--count", "3", "--seed", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc["counts"]["failed"] == 0
    path = tmp_path / "rep.json"
    path.write_text(out)
    code, out = run_cli(capsys, "report", "--input", str(path))
    assert code == 0
    assert "total" in out


def test_cli_fuzz_explore_gate(capsys):
    code = main(["fuzz", "--c", "6", "--count", "2", "--seed", "0"])
    assert code == 1
    code, out = run_cli(capsys, "fuzz", "--c", "6", "--count", "2", "--seed", "0",
                        "--explore")
    assert code == 0

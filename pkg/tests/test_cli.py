import io
import json

import pytest

from cavpg.cli import main
from cavpg.families import make_f3
from cavpg.graph import cycle_graph, to_text


@pytest.fixture
def c4(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text(to_text(cycle_graph(4)))
    return p


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_recognize_yes(capsys, c4):
    code, out, _ = run(capsys, "recognize", c4)
    assert code == 0 and "decision: representable" in out


def test_gen_pipe_recognize(capsys, monkeypatch):
    code, text, _ = run(capsys, "gen", "f3", "--k", "5")
    assert code == 0
    code, out, _ = run(capsys, "recognize", "-", "--json", stdin=text, monkeypatch=monkeypatch)
    obj = json.loads(out)
    assert code == 1 and obj["certificate"]["family"] == "F3"


def test_gen_json_matches_text(capsys):
    _, text, _ = run(capsys, "gen", "f5", "--k", "4")
    _, js, _ = run(capsys, "gen", "f5", "--k", "4", "--format", "json")
    assert json.loads(js)["n"] == int(text.split()[0])


def test_gen_f4_spec(capsys, tmp_path):
    spec = tmp_path / "s.json"
    spec.write_text('{"gaps": [[0, 1], [1, 0, 1]]}')
    code, text, _ = run(capsys, "gen", "f4", "--f4-spec", spec)
    assert code == 0 and text.split()[0].isdigit()


def test_verify_round_trip(capsys, c4, tmp_path):
    _, out, _ = run(capsys, "recognize", c4, "--json")
    res = tmp_path / "res.json"
    res.write_text(out)
    code, out, _ = run(capsys, "verify", c4, res)
    assert code == 0 and json.loads(out) == []
    rep = tmp_path / "rep.json"
    rep.write_text(json.dumps(json.loads(res.read_text())["representation"]))
    assert run(capsys, "verify", c4, rep)[0] == 0


def test_verify_reports_violations(capsys, c4, tmp_path):
    rep = tmp_path / "rep.json"
    rep.write_text(json.dumps({"segments": [
        {"v": i, "dir": "H", "x": 0, "y": 2 * i, "len": 1} for i in range(4)
    ]}))
    code, out, _ = run(capsys, "verify", c4, rep)
    assert code == 1 and {v["kind"] for v in json.loads(out)} == {"missing-adjacency"}


def test_oracle(capsys, c4, tmp_path):
    code, out, _ = run(capsys, "oracle", c4, "--grid", "4", "4", "--max-len", "3")
    assert code == 0 and "segments" in out
    code, out, _ = run(capsys, "gen", "k4-e", "-o", tmp_path / "d.txt")
    code, out, _ = run(capsys, "oracle", tmp_path / "d.txt", "--grid", "6", "6", "--max-len", "5")
    assert code == 1 and json.loads(out)["result"] == "exhausted"
    code, _, err = run(capsys, "oracle", tmp_path / "d.txt", "--cap", "3")
    assert code == 2 and "cap" in err


def test_render(capsys, c4, tmp_path):
    _, out, _ = run(capsys, "recognize", c4, "--json")
    (tmp_path / "r.json").write_text(out)
    svg = tmp_path / "r.svg"
    assert run(capsys, "render", tmp_path / "r.json", "-o", svg)[0] == 0
    assert svg.read_text().count("<line ") == 4


@pytest.mark.parametrize(
    "text", ["", "3 1\n0 5\n", "2 1\n0 0\n", "{bad json", "2 2\n0 1\n"]
)
def test_malformed_graph_exit_2(capsys, tmp_path, text):
    p = tmp_path / "g.txt"
    p.write_text(text)
    code, _, err = run(capsys, "recognize", p)
    assert code == 2 and err.startswith("error:")


def test_missing_file_and_bad_args(capsys, tmp_path):
    assert run(capsys, "recognize", tmp_path / "nope")[0] == 2
    assert run(capsys, "gen", "f2")[0] == 2
    assert run(capsys, "gen", "f9", "--k", "4")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_output_deterministic(capsys, tmp_path):
    p = tmp_path / "f.txt"
    p.write_text(to_text(make_f3(7)))
    a = run(capsys, "recognize", p, "--json")[1]
    b = run(capsys, "recognize", p, "--json")[1]
    assert a == b

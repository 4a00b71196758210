from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from kmss import cli
from kmss.render import render_diagram
from kmss.vogan import vogan


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def a3(tmp_path):
    path = tmp_path / "a3.json"
    path.write_text(render_diagram(vogan("A", 3, [0, 2]), "json"))
    return str(path)


def test_list_forms(capsys):
    code, out, _ = run(capsys, "list-forms", "A", "2")
    data = json.loads(out)
    assert code == cli.OK and data["schema"] == "kmss/1"
    assert len(data["forms"]) == 5
    assert all(f["row"] for f in data["forms"])


def test_reduce(capsys, a3):
    code, out, _ = run(capsys, "reduce", a3)
    data = json.loads(out)
    assert code == cli.OK and data["schema"] == "kmss/1"
    assert data["painted_count"] <= 2 and data["class_size"] >= 1


def test_classify(capsys, a3):
    code, out, _ = run(capsys, "classify", a3)
    data = json.loads(out)
    assert code == cli.OK and data["schema"] == "kmss/1"
    assert data["label"]["row"].startswith("A")


def test_classify_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO('{"series": "B", "rank": 3, "painted": [1]}'))
    code, out, _ = run(capsys, "classify", "-")
    assert code == cli.OK and json.loads(out)["classified"]


def test_unclassified_exit(capsys, a3, monkeypatch):
    import kmss.atlas as atlas

    monkeypatch.setattr(atlas, "tables_for", lambda series, rank: [])
    code, out, _ = run(capsys, "classify", a3)
    assert code == cli.UNCLASSIFIED
    assert json.loads(out)["label"] == "unclassified"


def test_fixed_roots(capsys, a3):
    code, out, _ = run(capsys, "fixed-roots", a3)
    data = json.loads(out)
    assert code == cli.OK and data["schema"] == "kmss/1" and data["simple_roots"]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "A", "1", "--case", "I", "--window", "2")
    data = json.loads(out)
    assert code == cli.OK and data["agree"]
    assert data["report"]


def test_verify_window_from_env(capsys, monkeypatch):
    monkeypatch.setenv("KMSS_WINDOW", "2")
    code, out, _ = run(capsys, "verify", "A", "2", "--case", "IV")
    assert code == cli.OK and json.loads(out)["agree"]
    monkeypatch.setenv("KMSS_WINDOW", "zero")
    code, _, err = run(capsys, "verify", "A", "2", "--case", "IV")
    assert code == cli.INVALID and "KMSS_WINDOW" in err


def test_verify_disagreement_exit(capsys, monkeypatch):
    import kmss.atlas as atlas

    monkeypatch.setattr(atlas, "crosscheck", lambda case, window: {"schema": "kmss/1", "agree": False})
    code, _, _ = run(capsys, "verify", "A", "1", "--case", "II", "--window", "1")
    assert code == cli.DISAGREE


def test_verify_unknown_case(capsys):
    code, _, err = run(capsys, "verify", "A", "1", "--case", "IX")
    assert code == cli.INVALID and err.startswith("kmss: error:")


@pytest.mark.parametrize("fmt", ["md", "csv", "json"])
def test_table(capsys, fmt):
    code, out, _ = run(capsys, "table", "B", "--param", "3", "--format", fmt)
    assert code == cli.OK
    if fmt == "json":
        assert json.loads(out)["schema"] == "kmss/1"
    elif fmt == "csv":
        assert out.startswith("# schema=kmss/1")
    else:
        assert out.count("\n|") >= 11


def test_table_unknown_key(capsys):
    code, _, err = run(capsys, "table", "E8")
    assert code == cli.INVALID and "unknown table" in err


@pytest.mark.parametrize("fmt", ["ascii", "dot", "json"])
def test_render(capsys, a3, fmt):
    code, out, _ = run(capsys, "render", a3, "--format", fmt)
    assert code == cli.OK
    if fmt == "json":
        assert json.loads(out)["schema"] == "kmss/1"
    elif fmt == "dot":
        assert out.startswith('graph "A3"')
    else:
        assert "@0" in out and "@2" in out


def test_invalid_input(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"series": "E", "rank": 6}')
    code, out, err = run(capsys, "classify", str(bad))
    assert code == cli.INVALID and out == ""
    assert "$.series" in err
    code, _, err = run(capsys, "classify", str(tmp_path / "missing.json"))
    assert code == cli.INVALID


def test_console_script_installed():
    proc = subprocess.run(["kmss", "list-forms", "A", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert len(json.loads(proc.stdout)["forms"]) == 4

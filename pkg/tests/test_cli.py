import json
import subprocess
import sys

import pytest

from layered_wheels.cli import main
from layered_wheels.construction import LayeredWheelParams, build
from layered_wheels.formats import dump, labels_of, load
from layered_wheels.graph import path_graph, theta_graph
from layered_wheels.separators import WeightFunction, format_weights


def test_gen_formats(tmp_path, capsys):
    assert main(["gen", "--k", "3", "--g", "1", "--format", "dimacs"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "p edge 51 52"
    out = tmp_path / "g.txt"
    assert main(["gen", "--k", "2", "--g", "1", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[0] == "18 17"
    assert load(out.read_text()).graph == build(LayeredWheelParams(1, 2)).graph


def test_gen_json_has_labels(tmp_path):
    out = tmp_path / "g.json"
    assert main(["gen", "--k", "3", "--g", "1", "--format", "json", "--out", str(out)]) == 0
    assert load(out.read_text()).classes == tuple(build(LayeredWheelParams(1, 3)).classes)


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--k", "9", "--g", "9"],
        ["gen", "--k", "0", "--g", "1"],
        ["gen", "--k", "3"],
        ["frobnicate"],
        ["verify", "--k", "3", "--g", "1", "--samples", "0"],
        ["tw", "--in", "/nonexistent/file"],
    ],
)
def test_usage_errors_exit_3(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse rejects before a command runs
        code = exc.code
    assert code == 3
    assert "error" in capsys.readouterr().err


def test_vertex_cap_message(capsys):
    assert main(["gen", "--k", "9", "--g", "9"]) == 3
    assert "vertex cap" in capsys.readouterr().err


def test_verify_suites_pass_and_report(tmp_path, capsys):
    rep = tmp_path / "r.json"
    assert main(["verify", "--k", "3", "--g", "1", "--suite", "construction", "--report", str(rep), "--no-timing"]) == 0
    data = json.loads(rep.read_text())
    assert data["params"]["k"] == 3 and data["params"]["g"] == 1
    assert all(c["status"] == "pass" and "ms" not in c for c in data["checks"])
    assert "PASS" in capsys.readouterr().out


def test_verify_report_is_byte_stable(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["verify", "--k", "3", "--g", "1", "--suite", "separator", "--seed", "4", "--samples", "5",
                     "--report", str(path), "--no-timing"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_tw_modes(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text(dump(build(LayeredWheelParams(1, 3)).graph, "edgelist"))
    for mode in ("exact", "upper", "lower"):
        assert main(["tw", "--in", str(f), "--mode", mode]) == 0
        assert capsys.readouterr().out.strip() == "2"


def test_tw_bad_input(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("3 1\n0 7\n")
    assert main(["tw", "--in", str(f)]) == 3


def test_separator_command(tmp_path, capsys):
    lw = build(LayeredWheelParams(1, 3))
    g, w = tmp_path / "g.json", tmp_path / "w.txt"
    g.write_text(dump(lw.graph, "json", labels_of(lw)))
    w.write_text(format_weights(WeightFunction.uniform(lw.graph.n)))
    assert main(["separator", "--in", str(g), "--weights", str(w)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("K: ") and "PASS" in out


def test_separator_needs_labels_and_good_weights(tmp_path, capsys):
    g, w = tmp_path / "g.txt", tmp_path / "w.txt"
    g.write_text(dump(path_graph(3), "edgelist"))
    w.write_text("0 1/1\n")
    assert main(["separator", "--in", str(g), "--weights", str(w)]) == 3
    lw = build(LayeredWheelParams(1, 2))
    g.write_text(dump(lw.graph, "json", labels_of(lw)))
    w.write_text("0 3/2\n")
    assert main(["separator", "--in", str(g), "--weights", str(w)]) == 3


def test_theta_command(tmp_path, capsys):
    f = tmp_path / "t.txt"
    f.write_text(dump(theta_graph(5, 5, 5), "edgelist"))
    assert main(["theta", "--in", str(f), "--min-length", "4"]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["length"] == 5 and len(cert["paths"]) == 3
    assert main(["theta", "--in", str(f), "--min-length", "6"]) == 0
    assert capsys.readouterr().out.strip() == "none"
    assert main(["theta", "--in", str(f), "--min-length", "1"]) == 3


def test_theta_budget_exit_2(tmp_path, monkeypatch, capsys):
    f = tmp_path / "g.txt"
    f.write_text(dump(build(LayeredWheelParams(1, 3)).graph, "edgelist"))
    monkeypatch.setenv("LW_BUDGET", "5")
    assert main(["theta", "--in", str(f), "--min-length", "2"]) == 2
    monkeypatch.setenv("LW_BUDGET", "lots")
    assert main(["theta", "--in", str(f), "--min-length", "2"]) == 3


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "layered_wheels", "gen", "--k", "1", "--g", "1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.splitlines()[0] == "5 4"

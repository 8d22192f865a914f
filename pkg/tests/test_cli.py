import json
import os
import subprocess
import sys

import pytest

from ridlab.graphs import cycle, from_graph6, path, to_graph6
from ridlab.harness.cli import main


def run(args, stdin=None):
    """Run the CLI in a subprocess, as a user would."""
    return subprocess.run(
        [sys.executable, "-m", "ridlab", *args],
        input=stdin, capture_output=True, text=True, check=False,
    )


def test_solve_p4_text():
    proc = run(["solve", "--in", "-"], stdin=to_graph6(path(4)) + "\n")
    assert proc.returncode == 0, proc.stderr
    assert "gamma_rI=4" in proc.stdout
    assert proc.stderr == ""


def test_solve_json_with_extras(tmp_path, capsys):
    f = tmp_path / "in.g6"
    f.write_text(to_graph6(path(4)) + "\n\n" + to_graph6(cycle(5)) + "\n")
    assert main(["solve", "--in", str(f), "--format", "json", "--gamma", "--gamma-r", "--gamma-rR"]) == 0
    recs = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [r["gamma_rI"] for r in recs] == [4, 5]
    assert recs[0] == {
        "graph6": "Ch", "n": 4, "m": 3, "gamma_rI": 4, "witness": recs[0]["witness"],
        "gamma": 2, "gamma_r": 2, "gamma_rR": 4,
    }
    assert len(recs[0]["witness"]) == 4


def test_solve_tree_dp(tmp_path, capsys):
    f = tmp_path / "t.g6"
    f.write_text(to_graph6(path(7)) + "\n")
    assert main(["solve", "--in", str(f), "--tree-dp"]) == 0
    assert "gamma_rI=6" in capsys.readouterr().out
    f.write_text(to_graph6(cycle(4)) + "\n")
    assert main(["solve", "--in", str(f), "--tree-dp"]) == 2


def test_solve_bad_input():
    proc = run(["solve", "--in", "-"], stdin="Ch\nC~~\n")
    assert proc.returncode == 2
    assert proc.stdout == ""
    assert ":2:" in proc.stderr
    assert run(["solve", "--in", "/nonexistent/file"]).returncode == 2
    assert run(["solve", "--in", "-"], stdin="\n").returncode == 2


def test_check_pass_and_fail(capsys):
    assert main(["check", "--theorem", "gadget", "--max-n", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] and data["schema"] == "rid-lab/1"
    assert main(["check", "--theorem", "rid-eq-3", "--max-n", "5", "--format", "text"]) == 1
    out = capsys.readouterr().out
    assert out.startswith("FAIL rid-eq-3") and "DL{" in out


def test_check_bad_args():
    assert main(["check", "--theorem", "sandwich", "--max-n", "99"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["check", "--theorem", "nope", "--max-n", "3"])
    assert info.value.code == 2


def test_check_jobs_env():
    proc = subprocess.run(
        [sys.executable, "-m", "ridlab", "check", "--theorem", "sandwich", "--max-n", "5"],
        capture_output=True, text=True, env={**os.environ, "RID_LAB_JOBS": "2"},
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["instances_checked"] == 31


def test_gen_T4k(tmp_path):
    side = tmp_path / "side.json"
    proc = run(["gen", "--family", "T4k", "--params", "k=2", "--sidecar", str(side)])
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert len(lines) == 1 and from_graph6(lines[0]).n == 9
    meta = json.loads(side.read_text())
    assert meta["predicted_rid"] == 6 and meta["params"] == {"k": 2}
    assert meta["graph6"] == lines[0]


def test_gen_default_sidecar_goes_to_stderr(capsys):
    assert main(["gen", "--family", "J/T4"]) == 0
    captured = capsys.readouterr()
    assert from_graph6(captured.out.strip()).n == 11
    assert json.loads(captured.err)["predicted_rid"] == 7


def test_gen_families_json(capsys):
    for fam, params, want in [
        ("J", ["tag=T5"], [5]),
        ("TERMINAL", ["n=4"], [4, 4, 4]),
        ("REALIZE", ["a=3,b=5"], [5]),
        ("WINDMILL", ["k=3"], [2]),
        ("WINDMILL_MINUS", ["k=4"], [3]),
    ]:
        assert main(["gen", "--family", fam, "--params", *params, "--format", "json"]) == 0
        recs = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
        assert [r["predicted_rid"] for r in recs] == want


@pytest.mark.parametrize("args", [
    ["gen", "--family", "NOPE"],
    ["gen", "--family", "T4k", "--params", "k=0"],
    ["gen", "--family", "T4k", "--params", "k=x"],
    ["gen", "--family", "T4k", "--params", "k"],
    ["gen", "--family", "T4k"],
    ["gen", "--family", "REALIZE", "--params", "a=2", "b=3"],
    ["gen", "--family", "J/T9"],
])
def test_gen_errors(args):
    assert main(args) == 2


def test_reduce(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text(to_graph6(path(3)) + "\n")
    assert main(["reduce", "--in", str(f)]) == 0
    assert from_graph6(capsys.readouterr().out.strip()).n == 24
    assert main(["reduce", "--in", str(f), "--verify", "--format", "json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["holds"] and rec["gamma_rI"] == rec["expected"] == 16


def test_enumerate(capsys):
    assert main(["enumerate", "--class", "trees", "--n", "7"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 11
    assert main(["enumerate", "--class", "connected", "--n", "5"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 21
    assert main(["enumerate", "--class", "connected", "--n", "9"]) == 2


def test_missing_subcommand():
    proc = run([])
    assert proc.returncode == 2 and "usage" in proc.stderr

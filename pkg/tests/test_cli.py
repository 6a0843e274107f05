import json
import os
import subprocess
import sys

import pytest

from uum import parse_cxt, serialize_csv, serialize_cxt
from uum.cli import main


@pytest.fixture
def files(tmp_path, table1, table2):
    t1 = tmp_path / "t1.cxt"
    t2 = tmp_path / "t2.cxt"
    t1.write_text(serialize_cxt(table1), encoding="utf-8")
    t2.write_text(serialize_cxt(table2), encoding="utf-8")
    return str(t1), str(t2)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def uum(*argv, env=None):
    full_env = dict(os.environ, **(env or {}))
    return subprocess.run(
        [sys.executable, "-m", "uum", *argv], capture_output=True, env=full_env, check=False
    )


def test_concepts(capsys, files):
    code, out, _ = run(capsys, "concepts", files[0])
    assert code == 0
    assert out.splitlines() == [
        "{A, B, C} ; {}",
        "{B, C} ; {γ}",
        "{A, C} ; {β}",
        "{C} ; {β, γ}",
        "{A} ; {α, β}",
        "{} ; {α, β, γ}",
    ]


def test_concepts_json_and_dot(capsys, files, tmp_path):
    dot = tmp_path / "l.dot"
    code, out, _ = run(capsys, "concepts", files[0], "--json", "--dot", str(dot), "--labels", "reduced")
    assert code == 0
    data = json.loads(out)
    assert data["concept_count"] == 6
    assert data["input_digest"].startswith("sha256:")
    assert len(data["covers"]) == 7
    assert dot.read_text(encoding="utf-8").startswith("digraph lattice {")


def test_negate_round_trip(capsys, files, table1):
    code, out, _ = run(capsys, "negate", files[0])
    assert code == 0
    assert parse_cxt(out).relation == tuple(tuple(not x for x in row) for row in table1.relation)
    code, out, _ = run(capsys, "negate", files[0], "--to", "csv")
    assert out.splitlines()[0] == ",α,β,γ"


def test_csv_input(capsys, tmp_path, table1):
    path = tmp_path / "t1.csv"
    path.write_text(serialize_csv(table1), encoding="utf-8")
    code, out, _ = run(capsys, "concepts", str(path))
    assert code == 0 and len(out.splitlines()) == 6


def test_anticoncepts_and_candidates(capsys, files):
    code, out, _ = run(capsys, "anticoncepts", files[0])
    assert code == 0 and len(out.splitlines()) == 5
    code, out, _ = run(capsys, "candidates", files[0])
    assert code == 0
    assert out.splitlines()[1].startswith("1. {B, C} ; {α}")
    code, out, _ = run(capsys, "candidates", files[0], "--json")
    assert json.loads(out)["heuristic"].endswith("(heuristic)")


def test_reveal(capsys, files):
    code, out, _ = run(capsys, "reveal", *files, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["phi"]["A"] == ["δ"]
    assert data["psi"]["δ"] == ["A", "D"]
    assert data["discovery_context"]["rows"] == ["...X", "X...", "....", "X..X", ".XX."]


def test_seeds(capsys, files):
    code, out, _ = run(capsys, "seeds", *files, "--all")
    assert code == 0
    assert "  {B} ; {α}" in out.splitlines()
    assert out.rstrip().endswith("Props 1–6: pass [exhaustive]")
    code, out, _ = run(capsys, "seeds", *files, "--json", "--all")
    data = json.loads(out)
    assert data["seeds"][0]["objects"] == ["B"]
    assert data["all_seeds"] == [{"objects": ["B"], "attributes": ["α"]}]


def test_verify(capsys, files):
    code, out, _ = run(capsys, "verify", *files)
    assert code == 0
    assert out.splitlines()[-1] == "Props 1–6: pass [exhaustive]"
    code, out, _ = run(capsys, "verify", *files, "--budget", "16", "--seed", "5", "--json")
    data = json.loads(out)
    assert data["passed"] and not data["exhaustive"] and data["rng_seed"] == 5


def test_removals_need_flag(capsys, tmp_path, files):
    dropped = tmp_path / "dropped.cxt"
    dropped.write_text("B\n\n3\n3\n\nA\nB\nC\nα\nβ\nγ\nX..\n...\n...\n", encoding="utf-8")
    code, _, err = run(capsys, "verify", files[0], str(dropped))
    assert code == 2 and "allow" in err
    code, _, _ = run(capsys, "verify", files[0], str(dropped), "--allow-removals")
    assert code == 0


def test_gen_extend_dot(capsys, files, tmp_path):
    code, out, err = run(capsys, "gen", "--objects", "4", "--attributes", "3", "--seed", "1")
    assert code == 0 and err == ""
    assert parse_cxt(out).n_objects == 4
    code, out, err = run(capsys, "gen", "--objects", "2", "--attributes", "2")
    assert code == 0 and err.startswith("seed: ")
    code, out, _ = run(capsys, "extend", files[0], "--new-objects", "2", "--seed", "3", "--to", "csv")
    assert code == 0 and len(out.splitlines()) == 6
    code, out, _ = run(capsys, "dot", files[0])
    assert code == 0 and out.count("->") == 7


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--trials", "2", "--objects", "4,5", "--attributes", "4", "--seed", "9")
    assert code == 0
    assert len(out.splitlines()) == 5


def test_out_option(capsys, files, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = run(capsys, "concepts", files[0], "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8").startswith("{A, B, C} ; {}")


def test_cap_exceeded(capsys, files):
    code, _, err = run(capsys, "concepts", files[0], "--cap", "3")
    assert code == 1 and "cap" in err


def test_cap_from_environment(files):
    proc = uum("concepts", files[0], env={"UUM_CAP": "2"})
    assert proc.returncode == 1
    proc = uum("concepts", files[0], env={"UUM_CAP": "many"})
    assert proc.returncode == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("concepts", "/nonexistent/file.cxt"),
        ("gen", "--objects", "2", "--attributes", "2", "--density", "3"),
        ("frobnicate",),
    ],
)
def test_usage_errors_exit_2(argv):
    assert uum(*argv).returncode == 2


def test_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.cxt"
    bad.write_text("B\n\n1\n1\n\ng\nm\nQ\n", encoding="utf-8")
    code, _, err = run(capsys, "concepts", str(bad))
    assert code == 2 and "line 8" in err


def test_repeated_runs_are_byte_identical(files):
    for argv in (
        ("concepts", files[0], "--json"),
        ("seeds", *files, "--json"),
        ("candidates", files[0], "--json"),
        ("eval", "--trials", "3", "--seed", "2", "--jobs", "2"),
    ):
        first, second = uum(*argv), uum(*argv)
        assert first.returncode == 0
        assert first.stdout == second.stdout

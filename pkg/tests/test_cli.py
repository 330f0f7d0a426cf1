import json
import subprocess
import sys

import pytest

from knotcert.cli import main
from knotcert.records import bundled_text

STABILIZED = [[-1, 1, 0, 0], [0, -1, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, [json.loads(line) for line in out.splitlines()], err


def test_invariants_trefoil(capsys):
    code, (rep,), _ = run(capsys, "invariants", "--braid", "1 1 1")
    assert code == 0
    assert rep["sigma"] == -2 and rep["width"] == 2 and rep["surface_genus"] == 1
    assert rep["alexander"] == [[-1, 1], [0, -1], [1, 1]]
    assert rep["certificate"]["verdict"] == "Definite"


def test_invariants_figure_eight(capsys):
    code, (rep,), _ = run(capsys, "invariants", "--braid", "1 -2 1 -2")
    assert code == 0 and rep["certificate"]["verdict"] == "NotDefinite"


def test_empty_file(capsys, tmp_path):
    f = tmp_path / "empty.jsonl"
    f.write_text("")
    code, reps, _ = run(capsys, "invariants", str(f))
    assert code == 0 and reps == []


def test_bad_record_is_named_and_others_survive(capsys, tmp_path):
    f = tmp_path / "mixed.jsonl"
    f.write_text('{"name": "ok", "braid": [1, 1, 1]}\n'
                 '{"name": "broken", "seifert_matrix": [[1, 0], [0, 1]]}\n'
                 '{"name": "ok2", "braid": "1 -2 1 -2"}\n')
    code, reps, err = run(capsys, "invariants", str(f))
    assert code == 2
    assert [r["name"] for r in reps] == ["ok", "ok2"]
    assert "broken" in err


def test_invalid_json_line(capsys, tmp_path):
    f = tmp_path / "bad.jsonl"
    f.write_text('{"name": "ok", "braid": [1, 1, 1]}\n{oops\n')
    code, reps, err = run(capsys, "invariants", str(f))
    assert code == 2 and len(reps) == 1 and "line 2" in err


def test_missing_file(capsys, tmp_path):
    code, reps, _ = run(capsys, "invariants", str(tmp_path / "nope.jsonl"))
    assert code == 2 and reps == []


def test_csv_input(capsys, tmp_path):
    f = tmp_path / "knots.csv"
    f.write_text('name,seifert_matrix,minimal_genus_asserted\n'
                 'trefoil,"-1 1; 0 -1",\n'
                 'stab,"-1 1 0 0; 0 -1 0 0; 0 0 0 1; 0 0 0 0",true\n')
    code, reps, _ = run(capsys, "certify", str(f), "--format", "csv")
    assert code == 0
    assert [r["certificate"]["verdict"] for r in reps] == ["Definite", "NotDefinite"]


def test_certify_flag(capsys):
    m = json.dumps(STABILIZED)
    _, (rep,), _ = run(capsys, "certify", "--matrix", m)
    assert rep["certificate"]["verdict"] == "Unknown"
    _, (rep,), _ = run(capsys, "certify", "--matrix", m, "--assert-minimal")
    assert rep["certificate"]["verdict"] == "NotDefinite"
    assert rep["certificate"]["reason"] == "SigmaDeficitOnMinimalSurface"
    _, (rep,), _ = run(capsys, "certify", "--matrix", "[[-1,1],[0,-1]]", "--assert-minimal")
    assert rep["certificate"]["verdict"] == "Definite"


def test_periodic(capsys):
    code, reps, _ = run(capsys, "periodic", "--matrix", "[[-1,1],[0,-1]]", "--period", "2,3", "--period", "5")
    assert code == 0
    assert [r["period"] for r in reps] == [2, 3, 5]
    assert all(r["passed"] for r in reps)
    assert reps[1]["cover"]["sigma"] == -6


def test_periodic_rejects_small_period(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["periodic", "--braid", "1 1 1", "--period", "1"])
    assert exc.value.code == 2


def test_lk_cover_bundled(capsys):
    code, reps, _ = run(capsys, "lk-cover")
    assert code == 0
    assert len(reps) == 10 and all(r["passed"] for r in reps)


def test_lk_cover_bad_curve(capsys, tmp_path):
    f = tmp_path / "c.jsonl"
    f.write_text('{"name": "axis", "a": {"vertices": [[0, 0, 0], [1, "1/2", 0], [0, 1, 0]]},'
                 ' "b": {"vertices": [[1, 0, 5], [1, "1/2", 5], [1, 1, 5]]}}\n')
    code, reps, err = run(capsys, "lk-cover", str(f))
    assert code == 2 and reps == [] and "CurveMeetsAxis" in err


def test_census_counts(capsys, tmp_path):
    summary = tmp_path / "summary.json"
    code, reps, err = run(capsys, "census", "--summary", str(summary))
    assert code == 0 and len(reps) == 8
    s = json.loads(summary.read_text())
    assert s["counts"] == {"Definite": 3, "NotDefinite": 4, "Unknown": 1}
    assert s["rejected"] == 0 and "version" in s
    assert "Definite" in err


def test_census_rejects_one(capsys, tmp_path):
    f = tmp_path / "k.jsonl"
    f.write_text(bundled_text("starter.jsonl") + '{"name": "bad", "braid": [1, 1]}\n')
    summary = tmp_path / "s.json"
    code, reps, _ = run(capsys, "census", str(f), "--summary", str(summary))
    assert code == 2 and len(reps) == 8
    assert json.loads(summary.read_text())["rejected"] == 1


def test_single_record_census_matches_invariants(capsys, tmp_path):
    f = tmp_path / "one.jsonl"
    f.write_text('{"name": "4_1", "braid": [1, -2, 1, -2]}\n')
    _, a, _ = run(capsys, "census", str(f))
    _, b, _ = run(capsys, "invariants", str(f))
    assert a == b


def test_jobs_keep_input_order(capsys):
    _, serial, _ = run(capsys, "census")
    _, parallel, _ = run(capsys, "census", "--jobs", "3")
    assert serial == parallel


def test_echo_round_trips(capsys, tmp_path):
    _, reps, _ = run(capsys, "census")
    f = tmp_path / "echo.jsonl"
    f.write_text("".join(json.dumps({"name": r["name"], "seifert_matrix": r["seifert_matrix"]}) + "\n"
                         for r in reps))
    _, again, _ = run(capsys, "census", str(f))
    for r, s in zip(reps, again):
        assert {k: v for k, v in r.items() if k != "input"} == \
            {k: v for k, v in s.items() if k != "input"}
    # the echoed source alone reproduces the report exactly
    f.write_text("".join(json.dumps({"name": r["name"], **r["input"]}) + "\n" for r in reps))
    _, again, _ = run(capsys, "census", str(f))
    assert again == reps


def test_out_file_and_stdin(tmp_path):
    out = tmp_path / "r.jsonl"
    proc = subprocess.run([sys.executable, "-m", "knotcert.cli", "invariants", "-", "--out", str(out)],
                          input='{"name": "t", "braid": [1, 1, 1]}\n', capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == ""
    assert json.loads(out.read_text())["sigma"] == -2

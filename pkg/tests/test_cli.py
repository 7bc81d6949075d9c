import json
import subprocess
import sys
from pathlib import Path

from gzhess.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_vol_gz_alpha(capsys):
    code, out = run(capsys, "vol-gz", "--n", "3", "--basis", "alpha")
    assert code == 0
    assert out == "1/2*a1^2*a2 + 1/2*a1*a2^2\n"


def test_vol_gz_lambda_basis(capsys):
    code, out = run(capsys, "vol-gz", "--n", "2", "--basis", "alpha")
    assert code == 0 and out == "a1\n"


def test_vol_gz_eval(capsys):
    # both computation paths agree on the staircase point: volume 1
    code, out = run(capsys, "vol-gz", "--n", "4", "--lambda", "3,2,1,0", "--eval")
    assert code == 0 and out == "1\n"
    code, out = run(capsys, "vol-gz", "--n", "3", "--lambda", "2,1,0", "--eval")
    assert code == 0 and out == "1\n"


def test_vol_gz_check(capsys):
    code, out = run(capsys, "vol-gz", "--n", "4", "--check")
    assert code == 0 and "check: ok" in out


def test_vol_gz_json(capsys):
    code, out = run(capsys, "vol-gz", "--n", "3", "--format", "json")
    payload = json.loads(out)
    assert payload["n"] == 3
    assert payload["volume"]["basis"] == "alpha"
    assert {tuple(t["exp"]): t["coeff"] for t in payload["volume"]["terms"]} == {
        (2, 1): "1/2",
        (1, 2): "1/2",
    }


def test_vol_face(capsys):
    code, out = run(capsys, "vol-face", "--n", "4", "--face", "H(1,1);H(1,2);V(3,4)")
    assert code == 0
    assert "tableaux: 7" in out and "dimension: 3" in out


def test_vol_face_json_schema(capsys):
    code, out = run(
        capsys, "vol-face", "--n", "4", "--face", "H(1,1);H(1,2);V(3,4)", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["tableaux"] == 7
    assert payload["volume"]["basis"] == "alpha" and payload["volume"]["n"] == 4


def test_vol_hess_all_methods(capsys):
    code, out = run(capsys, "vol-hess", "--h", "2,4,4,4", "--method", "all")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "equal: true"
    assert lines[0].startswith("faces: ") and lines[1].startswith("derivative: ")
    # all three printed polynomials coincide
    assert len({line.split(": ", 1)[1] for line in lines[:3]}) == 1


def test_vol_hess_single_method(capsys):
    # toric n=3 volume: the two facet areas add up with a cross term
    code, out = run(capsys, "vol-hess", "--h", "2,3,3", "--method", "derivative")
    assert code == 0 and out == "derivative: 1/2*a1^2 + 2*a1*a2 + 1/2*a2^2\n"


def test_hess_class_json(capsys):
    code, out = run(capsys, "hess-class", "--h", "2,3,4,4")
    payload = json.loads(out)
    assert payload["n"] == 4
    assert payload["terms"] == [
        {"w": "1,4,3,2", "coeff": "1"},
        {"w": "2,3,4,1", "coeff": "1"},
        {"w": "2,4,1,3", "coeff": "2"},
        {"w": "3,1,4,2", "coeff": "2"},
        {"w": "3,2,1,4", "coeff": "1"},
        {"w": "4,1,2,3", "coeff": "1"},
    ]


def test_hess_class_positivity(capsys):
    code, out = run(capsys, "hess-class", "--h", "2,3,3", "--positivity")
    payload = json.loads(out)
    assert payload["positivity"]["all_strictly_positive"] is True
    assert payload["positivity"]["min_coefficient"] == "1"


def test_decompose_perm(capsys):
    code, out = run(capsys, "decompose-perm", "--n", "3", "--verify")
    payload = json.loads(out)
    assert code == 0 and isinstance(payload, list)
    assert [e["r"] for e in payload] == [[1, 1], [2, 1]]
    assert payload[0]["r_min"] == "1,2,3" and payload[0]["r_max"] == "3,1,2"
    assert all(e["cube_ok"] is True for e in payload)
    assert payload[0]["volume"]["basis"] == "alpha"


def test_table_golden_bytes(capsys):
    for which in (1, 2):
        code, out = run(capsys, "table", "--which", str(which))
        assert code == 0
        golden = (GOLDEN / f"table{which}.csv").read_text()
        assert out == golden


def test_check_suite(capsys):
    code, out = run(capsys, "check", "--suite", "threepath", "--n", "3")
    assert code == 0 and "PASS threepath" in out


def test_check_runs_with_threads(capsys):
    code, single = run(capsys, "check", "--suite", "threepath", "--n", "3", "--threads", "1")
    code2, multi = run(capsys, "check", "--suite", "threepath", "--n", "3", "--threads", "4")
    assert code == code2 == 0 and single == multi


def test_determinism(capsys):
    _, a = run(capsys, "vol-hess", "--h", "2,4,4,4")
    _, b = run(capsys, "vol-hess", "--h", "2,4,4,4")
    assert a == b


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out = run(capsys, "vol-gz", "--n", "3", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "1/2*a1^2*a2 + 1/2*a1*a2^2\n"


def test_usage_error_exit_code(capsys):
    assert main(["vol-gz"]) == 1  # missing --n
    assert main(["no-such-command"]) == 1


def test_bad_value_exit_code(capsys):
    assert main(["vol-face", "--n", "4", "--face", "H(9,9)"]) == 1
    assert main(["vol-hess", "--h", "3,2,3"]) == 1  # not weakly increasing


def test_threads_env_var(capsys, monkeypatch):
    monkeypatch.setenv("GZHESS_THREADS", "3")
    code, out = run(capsys, "check", "--suite", "richardson", "--n", "3")
    assert code == 0 and "PASS richardson" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gzhess.cli", "vol-gz", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "a1\n"

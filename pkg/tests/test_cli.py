import json
import subprocess
import sys

import pytest

from spiralknots.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_seifert(capsys):
    code, out, _ = run(capsys, "seifert", "-p", "3", "-q", "2", "-e", "+-")
    assert code == 0 and json.loads(out)["matrix"] == [[-1, 1], [0, 1]]


def test_alexander_all(capsys):
    code, out, _ = run(capsys, "alexander", "-p", "3", "-q", "2", "-e", "+-", "--method", "all")
    data = json.loads(out)
    assert code == 0
    assert data["alexander"] == {"minexp": 0, "coeffs": [1, -3, 1]}
    assert data["agreement"] == {"direct": True, "recursive": True, "molinari": True}
    assert data["span"] == 2 and data["second_coeff"] == -3


def test_alexander_skips_capped_engine(capsys):
    code, out, _ = run(capsys, "alexander", "-p", "2", "-q", "23", "-e", "+", "--method", "all")
    assert code == 0 and json.loads(out)["skipped"] == ["molinari"]
    code, _, _ = run(capsys, "alexander", "-p", "2", "-q", "23", "-e", "+", "--method", "molinari")
    assert code == 1


def test_info(capsys):
    code, out, _ = run(capsys, "info", "-p", "2", "-q", "3", "-e", "+")
    assert code == 0 and "determinant  3" in out and "t^2 - t + 1" in out
    code, out, _ = run(capsys, "info", "-p", "2", "-q", "2", "-e", "+", "--json")
    assert json.loads(out)["genus"] == "0"


def test_obstruct(capsys):
    code, out, _ = run(capsys, "obstruct", "--poly", '{"minexp":0,"coeffs":[2,-3,2]}', "--q", "2")
    assert code == 0 and json.loads(out)["verdict"] == "NOT_SPIRAL"
    code, out, _ = run(capsys, "obstruct", "--poly", '{"minexp":0,"coeffs":[2,-3,2]}', "--disable", "monic")
    assert "second_coefficient" in json.loads(out)["violated"]
    code, _, _ = run(capsys, "obstruct", "--poly", "not json")
    assert code == 1


def test_jones(capsys):
    code, out, _ = run(capsys, "jones", "-p", "2", "-q", "3", "-e", "+")
    data = json.loads(out)
    assert code == 0 and data["jones"]["encoding"] == "doubled-exponent"
    code, _, _ = run(capsys, "jones", "-p", "5", "-q", "4", "-e", "++++", "--cap", "10")
    assert code == 1


def test_bridge(capsys):
    code, out, _ = run(capsys, "bridge", "-p", "2", "-q", "3", "-e", "+")
    assert code == 0 and json.loads(out) | {} == {
        "p": 2, "q": 3, "epsilon": "+", "bound_q_seed": 3, "bound_p_seed": 2, "min": 2,
    }


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["alexander", "-p", "3", "-q", "2"],
        ["alexander", "-p", "3", "-q", "2", "-e", "+"],
        ["alexander", "-p", "3", "-q", "2", "-e", "+x"],
        ["census", "--max-span", "4", "--format", "xml", "--out", "x"],
        ["census", "--max-span", "0", "--format", "csv", "--out", "x"],
    ],
)
def test_usage_errors_exit_one(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 1


def test_census_formats(capsys, tmp_path):
    for fmt in ("json", "csv", "md"):
        path = tmp_path / f"out.{fmt}"
        code, _, err = run(capsys, "census", "--max-span", "4", "--with-bridge", "--format", fmt, "--out", str(path))
        assert code == 0 and "10 records" in err and path.exists()
    code, _, _ = run(capsys, "census", "--max-span", "4", "--format", "csv", "--out", str(tmp_path / "no" / "x.csv"))
    assert code == 1


def test_census_invariant_violation_exits_two(capsys, tmp_path, monkeypatch):
    import spiralknots.census as census

    def broken(rec):
        raise census.InvariantViolation("forced")

    monkeypatch.setattr(census, "check_record", broken)
    code, _, err = run(capsys, "census", "--max-span", "2", "--format", "csv", "--out", str(tmp_path / "c.csv"))
    assert code == 2 and "forced" in err


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "spiralknots.cli", "info", "-p", "3", "-q", "2", "-e", "+-"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "determinant  5" in proc.stdout

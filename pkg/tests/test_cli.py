import io
import json
import subprocess
import sys

import pytest

from specht_hilbert.cli import main


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_gen(capsys):
    code, out, _ = run(["gen", "--lambda", "1,1,1"], capsys)
    assert code == 0
    assert len(out.strip().splitlines()) == 1
    code, out, _ = run(["gen", "--lambda", "2,2", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and len(data["generators"]) == 2
    code, out, _ = run(["gen", "--lambda", "2,2,1", "--format", "json"], capsys)
    from specht_hilbert.parsing import parse_polynomial

    degs = {parse_polynomial(g["polynomial"], 5).homogeneous_degree() for g in json.loads(out)["generators"]}
    assert degs == {4}


@pytest.mark.parametrize("bad", [["gen", "--lambda", "2,3"], ["gen", "--lambda", "a,b"], ["gen"],
                                 ["gen", "--lambda", "2,2", "--n", "5"], ["nosuch"],
                                 ["gen", "--lambda", "2,2", "--field", "fp:4"]])
def test_usage_errors(bad, capsys):
    code, _, err = run(bad, capsys)
    assert code == 2
    assert err


def test_hilbert_both(capsys):
    code, out, _ = run(["hilbert", "--lambda", "3,2", "--method", "both"], capsys)
    assert code == 0
    assert "(1+3t+t^2)/(1-t)^2" in out and "match" in out
    code, out, _ = run(["hilbert", "--lambda", "2,2,1", "--method", "both", "--field", "fp:2",
                        "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["match"] is True and data["field"] == "fp:2"


def test_hilbert_family_not_covered(capsys):
    code, _, err = run(["hilbert", "--lambda", "2,1,1", "--method", "closed-form"], capsys)
    assert code == 3 and "outside" in err
    code, out, _ = run(["hilbert", "--lambda", "2,1,1", "--method", "groebner"], capsys)
    assert code == 0 and "groebner" in out


def test_hilbert_degree_cap(capsys):
    code, _, _ = run(["hilbert", "--lambda", "3,3", "--method", "groebner", "--degree-cap", "2"], capsys)
    assert code == 4


def test_gb(capsys):
    code, out, _ = run(["gb", "--lambda", "1,1,1"], capsys)
    assert code == 0 and len(out.strip().splitlines()) == 1
    _, q, _ = run(["gb", "--lambda", "2,2", "--format", "json"], capsys)
    _, f3, _ = run(["gb", "--lambda", "2,2", "--field", "fp:3", "--format", "json"], capsys)
    assert json.loads(q)["leading_monomials"] == json.loads(f3)["leading_monomials"]
    assert set(json.loads(q)) >= {"order", "reduced", "basis", "leading_monomials"}


def test_gb_stdin(capsys, monkeypatch):
    code, out, _ = run(["gb", "--ideal", "-"], capsys, stdin="(x1-x2)\n", monkeypatch=monkeypatch)
    assert code == 0 and out.split("#")[0].strip() == "x2 - x1"
    code, out, _ = run(["gb", "--ideal", "-", "--format", "json"], capsys,
                       stdin='{"generators": ["x1*x2", "x1+x2"], "field": "fp:5"}', monkeypatch=monkeypatch)
    data = json.loads(out)
    assert code == 0 and data["field"] == "fp:5" and "x1^2" in data["basis"]


def test_gb_errors(capsys, monkeypatch, tmp_path):
    code, _, err = run(["gb", "--ideal", "-"], capsys, stdin="x1 +* x2\n", monkeypatch=monkeypatch)
    assert code == 2 and err
    code, _, _ = run(["gb", "--ideal", str(tmp_path / "missing.txt")], capsys)
    assert code == 2
    f = tmp_path / "ideal.txt"
    f.write_text("x1^5 - x2\nx2^5 - x1\n")
    code, _, _ = run(["gb", "--ideal", str(f), "--degree-cap", "4"], capsys)
    assert code == 4
    code, _, _ = run(["gb"], capsys)
    assert code == 2


def test_syt_count(capsys):
    code, out, _ = run(["syt-count", "--lambda", "3,3,1", "--format", "json"], capsys)
    assert code == 0 and json.loads(out) == {"lambda": [3, 3, 1], "hook_formula": 21, "enumerated": 21}


@pytest.mark.parametrize("argv", [["verify", "--suite", "recursion", "--max-n", "7"],
                                  ["verify", "--suite", "grobner-jdd", "--d", "2"],
                                  ["verify", "--suite", "radical", "--max-n", "6"]])
def test_verify_examples(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert "FAIL" not in out


def test_verify_usage(capsys):
    assert run(["verify", "--suite", "bogus"], capsys)[0] == 2
    assert run(["verify", "--suite", "radical", "--max-n", "9"], capsys)[0] == 2


def test_verify_json_is_stable(capsys):
    argv = ["verify", "--suite", "vanishing", "--max-n", "5", "--trials", "20", "--seed", "3",
            "--format", "json", "--no-timings"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b
    assert json.loads(a)["pass"] is True


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "specht_hilbert", "syt-count", "--lambda", "2,2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "2" in res.stdout

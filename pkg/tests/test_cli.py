import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from sl2char import cli, selfcheck
from sl2char.selfcheck import SuiteResult

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())
REGEN = os.environ.get("SL2CHAR_REGEN_GOLDEN") == "1"


def _argv(argv):
    # job files are resolved inside the golden directory
    out = []
    for a in argv:
        out.append(str(GOLDEN / a) if a.endswith(".json") else a)
    return out


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, out, err)
    return code, out.getvalue(), err.getvalue().replace(str(GOLDEN) + os.sep, "")


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    case = CASES[name]
    code, out, err = _run(_argv(case["argv"]))
    paths = GOLDEN / f"{name}.out", GOLDEN / f"{name}.err"
    if REGEN:
        paths[0].write_text(out)
        paths[1].write_text(err)
    assert code == case["exit"]
    assert out == paths[0].read_text()
    assert err == paths[1].read_text()
    if code:
        assert err.startswith("error: ") and err.count("\n") == 1
    else:
        assert err == ""


def test_output_is_deterministic():
    for name in ("trace_commutator", "torsion_product", "fibered_pa_point"):
        argv = _argv(CASES[name]["argv"])
        assert _run(argv) == _run(argv)


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "sl2char", "trace", "--word", "abAB"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout == "x^2 + y^2 + z^2 - x*y*z - 2\n"
    res = subprocess.run([sys.executable, "-m", "sl2char", "trace", "--word", "qq"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 1
    assert res.stderr == "error: undeclared generator 'q'\n"


def test_tampered_suite_exits_3(monkeypatch):
    def broken(rng, total, max_len):
        res = SuiteResult("trace-relation", total, passed=0,
                          counterexample="u=a v=b: tr(uv)+tr(uV) = z but tr(u)tr(v) = -x*y")
        return res
    suites = [("trace-relation", broken)] + selfcheck.SUITES[1:]
    monkeypatch.setattr(selfcheck, "SUITES", suites)
    code, out, err = _run(["selfcheck", "--trials", "1"])
    assert code == 3
    assert "trace-relation: 0/1 FAIL" in out
    assert err.startswith("error: selfcheck trace-relation failed: u=a v=b")


def test_tampered_sign_is_caught(monkeypatch):
    # a global sign flip in the trace polynomials breaks the trace relation
    from sl2char import skein
    real = skein.trace_polynomial
    monkeypatch.setattr(selfcheck, "trace_polynomial", lambda w: -real(w))
    code, out, err = _run(["selfcheck", "--trials", "5"])
    assert code == 3
    assert "error: selfcheck trace-relation failed" in err


def test_invalid_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _, err = _run(["cohomology", "--file", str(p)])
    assert code == 1 and err.startswith("error: invalid JSON")


def test_missing_file(tmp_path):
    code, _, err = _run(["cohomology", "--file", str(tmp_path / "none.json")])
    assert code == 1 and err.startswith("error: cannot read")

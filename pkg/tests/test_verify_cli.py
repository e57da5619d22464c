import json
import subprocess
import sys

import pytest

from freealg.cli import main
from freealg.core import NcPoly
from freealg.equation import EquationSpec
from freealg.parse import parse_poly
from freealg.verify import (
    counterexample_data,
    degree_gap_report,
    verify_commutator_counterexample,
    verify_commutator_equation,
    verify_jacobian_example,
    verify_non_centralizer_example,
    verify_overlap_example,
    verify_radical_counterexample,
)

FIELDS = {"claim", "params", "computed", "expected", "citation", "status", "millis"}


def test_commutator_counterexample_values():
    r = verify_commutator_counterexample(2)
    assert r.passed
    assert (r.computed["deg_f"], r.computed["deg_g"], r.computed["deg_commutator"]) == (15, 10, 9)
    assert r.computed["ratio"] == "9/10"
    assert verify_commutator_counterexample(3).computed["deg_commutator"] == 11
    with pytest.raises(ValueError):
        verify_commutator_counterexample(1)


def test_radical_counterexample_values():
    r = verify_radical_counterexample(2)
    assert r.passed
    assert r.computed["a1"] == "x^-1y^-1x^-1"
    assert r.computed["deg_a1"] == -3
    assert verify_radical_counterexample(3).computed["negative_exponent_scan"] == []


def test_radical_counterexample_deep_cutoff_reports_failure():
    r = verify_radical_counterexample(2, cutoff=-15)
    assert r.status == "fail"
    assert "finitely supported" in r.computed["error"]


@pytest.mark.parametrize("a,b", [(3, 1), (5, 3), (7, 5)])
def test_jacobian_reports(a, b):
    assert verify_jacobian_example(a, b).passed


def test_equation_reports():
    r = verify_commutator_equation(EquationSpec("xyx", 1, 3, 2))
    assert r.passed and r.computed["completeness_agrees"]
    assert verify_commutator_equation(EquationSpec("xyxyx", 2, 3, 2)).passed


def test_overlap_report():
    r = verify_overlap_example(3)
    assert r.passed
    assert r.computed["pair_degrees"] == [2, 4, 6]


@pytest.mark.parametrize("k,m,n,deg", [(3, 3, 2, 5), (4, 5, 3, 10)])
def test_non_centralizer_reports(k, m, n, deg):
    r = verify_non_centralizer_example(k, m, n)
    assert r.passed and r.computed["deg_commutator"] == deg


def test_degree_gap():
    d = counterexample_data(2)
    r = degree_gap_report(d.f, d.g, parse_poly("xy - yx"))
    assert r.computed["D"] == "9/25"
    assert (r.computed["weighted_degree"], r.computed["bound"], r.computed["deg_p_of_f_g"]) == (25, "9", 9)
    assert r.passed
    assert degree_gap_report(NcPoly.word("x"), NcPoly.word("y")).computed["D"] == "1"
    with pytest.raises(ValueError, match="algebraically dependent"):
        degree_gap_report(NcPoly.word("x"), NcPoly.word("xx"))


def test_reports_are_deterministic():
    runs = [
        verify_commutator_equation(EquationSpec("xyx", 1, 3, 2), trials=10, seed=7).to_json(timing=False)
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    assert verify_radical_counterexample(3).to_json(timing=False) == verify_radical_counterexample(3).to_json(timing=False)


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "thm31", "--k", "2"],
        ["verify", "thm42", "--k", "2"],
        ["verify", "ex11", "--a", "3", "--b", "1"],
        ["verify", "ex23", "--u", "xyx", "--l", "1", "--m", "3", "--n", "2", "--seed", "1"],
        ["verify", "ex24"],
        ["verify", "intro", "--k", "3", "--m", "3", "--n", "2"],
        ["solve", "--u", "xyx", "--m", "3", "--n", "2", "--free", "yy", "u1+u2", "--overlap", "2", "0", "1"],
        ["bimodule", "decompose", "--u", "xyx", "--poly", "xyxyyxyx + yy"],
        ["gap", "--f", "x+y^3", "--g", "y", "--p", "xy-yx"],
    ],
)
def test_cli_json_and_exit_code(argv, capsys):
    assert main(argv + ["--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert set(out) == FIELDS
    assert out["status"] == "pass"


def test_cli_text_output(capsys):
    assert main(["verify", "thm31", "--k", "2"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_cli_failures(capsys):
    assert main(["verify", "thm42", "--k", "2", "--cutoff", "-15"]) == 1
    assert main(["verify", "ex23", "--u", "xyx", "--m", "4", "--n", "2"]) == 2
    assert "coprime" in capsys.readouterr().err
    assert main(["gap", "--f", "x", "--g", "x^2"]) == 2
    with pytest.raises(SystemExit):
        main(["gap", "--f", "x^", "--g", "y"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "freealg", "verify", "ex24", "--json"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"

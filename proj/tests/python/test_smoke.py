import math

import numpy as np
import pytest

import slfast


def test_hjb1_fsm_five_sweeps_and_distance():
    spec = slfast.builtin("hjb1")
    out = slfast.solve(spec, "fsm", n=41)
    assert out["stats"]["sweeps"] == 5
    values = out["values"]
    assert values.shape == (41, 41)
    assert values[20, 20] == 0.0
    # Along the axis the scheme is exact.
    assert values[20, 40] == pytest.approx(2.0, abs=1e-12)
    assert np.isfinite(values).all()


def test_fim_insertions_and_imax():
    out = slfast.solve(slfast.builtin("hjb3"), "fim", n=41)
    assert out["insertions"].max() == out["stats"]["imax"] == 1
    assert out["insertions"][20, 20] == 0


def test_compare_reports_agreement():
    report = slfast.compare(slfast.builtin("hjb2"), ["fsm", "fim"], n=31)
    assert [m["status"] for m in report["methods"]] == ["agree", "agree"]


def test_custom_problem_and_target():
    spec = slfast.parse_problem("template = anisotropic\nlambda = 2\nmu = 1\n")
    assert spec.dynamics == "anisotropic"
    spec.target = (1.0, 0.0)
    out = slfast.solve(spec, "ufsm34", n=21)
    assert out["values"][10, 15] == 0.0


def test_guard_and_errors():
    with pytest.raises(slfast.SolverGuardError):
        slfast.solve(slfast.builtin("hjb5"), "fsm", n=41, max_sweeps=3)
    with pytest.raises(ValueError):
        slfast.builtin("hjb9")
    with pytest.raises(ValueError):
        slfast.solve(slfast.builtin("hjb1"), "fmm", n=11)


def test_table_csv():
    csv = slfast.table(["hjb1"], [21], jobs=1)
    header, row = csv.strip().splitlines()
    assert header.startswith("problem,n,dx")
    assert row.startswith("hjb1,21,")
    assert math.isclose(float(row.split(",")[2]), 0.2)

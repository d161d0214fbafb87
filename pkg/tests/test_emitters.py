"""Test the CSV, TeX and record renderings.

Module Information:
    - Filename: test_emitters.py
    - Module: test_emitters
    - Location: tests/
"""

import json
import math

import pandas as pd

from equichordal_lab import emitters
from equichordal_lab.dynamics import ConvergenceDiagnostics, FiberSample, PlanePoint
from equichordal_lab.refutation import refutation_report
from equichordal_lab.symmetry import check_invariance


def test_coefficients_tex(symbolic_table):
    text = emitters.coefficients_tex(symbolic_table.truncated(6))
    lines = text.splitlines()
    assert lines[0] == r"\begin{eqnarray*}"
    assert lines[1] == r"a_{2} &=& \frac{1}{4c^{2}-4c+2} \\"
    assert lines[3].startswith("a_{6} &=& ")
    assert not lines[3].endswith("\\\\")
    assert lines[-1] == r"\end{eqnarray*}"


def test_coefficients_frame(symbolic_table):
    df = emitters.coefficients_frame(symbolic_table.truncated(4))
    assert list(df.columns) == ["n", "c_mode", "numerator", "denominator", "a_n"]
    assert df["n"].tolist() == [0, 1, 2, 3, 4]
    assert set(df["c_mode"]) == {"symbolic"}
    assert df.loc[2, "a_n"] == "(1)/(4*c^2 - 4*c + 2)"
    assert df.loc[1, "numerator"] == "0"


def test_coefficients_record(table_at_seven_tenths):
    record = emitters.coefficients_record(table_at_seven_tenths)
    assert record["c_mode"] == "fixed:7/10"
    assert record["max_order"] == 10
    assert len(record["coefficients"]) == 11


def test_floats_keep_seventeen_digits():
    text = emitters.frame_to_csv(pd.DataFrame({"x": [0.1]}))
    assert text == "x\n0.10000000000000001\n"


def test_invariance_outputs(symbolic_table):
    report = check_invariance(symbolic_table.truncated(6))
    df = emitters.invariance_frame(report)
    assert df["n"].tolist() == [2, 4, 6]
    assert df["invariant"].all()
    tex = emitters.invariance_tex(report)
    assert tex.startswith(r"\begin{tabular}{rll}")
    assert "  2 & yes & $" in tex
    assert emitters.invariance_record(report)["all_invariant"] is True


def test_verdict_outputs(symbolic_table):
    verdict = refutation_report(symbolic_table)
    text = emitters.verdict_text(verdict)
    assert text.splitlines()[0] == "Verdict: REFUTED"
    record = json.loads(emitters.to_json(emitters.verdict_record(verdict)))
    assert record["refuted"] is True
    assert record["delta_a6_is_zero"] is True
    assert record["roots_in_interval"] == 1
    assert record["roots_excluding_half"] == 0
    assert record["half_is_root"] is True


def test_trajectory_exports():
    diag = ConvergenceDiagnostics(
        iterates=(PlanePoint(0.05, 0.1), PlanePoint(-0.03, -0.1), PlanePoint(0.01, 0.1)),
        limit=PlanePoint(0.0, 0.1),
        empirical_ratio=0.2,
        predicted_mu=0.2,
        converged=False,
        status="inconclusive",
        steps=2,
    )
    df = emitters.trajectory_frame(diag)
    assert list(df.columns) == ["iterate-index", "x", "y"]
    assert df["iterate-index"].tolist() == [0, 1, 2]
    record = emitters.trajectory_record(diag)
    assert record["limit"] == [0.0, 0.1]
    assert record["iterates"][1] == [-0.03, -0.1]


def test_fiber_frame():
    samples = [
        FiberSample(0.02, 0.0, 0.0003, 1e-19, image_defect=2e-19),
        FiberSample(0.5, 0.0, math.nan, math.nan, error="outside"),
    ]
    df = emitters.fiber_frame(samples)
    assert list(df.columns) == ["x", "y0", "F", "residual", "image_defect", "error"]
    assert df["error"].tolist() == ["", "outside"]
    assert math.isnan(df.loc[1, "F"])


def test_write_output(tmp_path, capsys):
    emitters.write_output("hello\n", None)
    assert capsys.readouterr().out == "hello\n"
    target = tmp_path / "nested" / "out.txt"
    emitters.write_output("a,b\n", target)
    assert target.read_bytes() == b"a,b\n"

"""Text renderings of every result: CSV, TeX, JSON records and the verdict narrative.

Module Information:
    - Filename: emitters.py
    - Module: emitters
    - Location: src/equichordal_lab/

Key Concepts:
    - Tables go through pandas; doubles are written with 17 significant digits
    - Coefficient tables print as an eqnarray* block, reports as a tabular
    - Records are plain dicts serialized with json.dumps(indent=2)
"""

from __future__ import annotations

from collections.abc import Sequence
import json
import pathlib
import sys
from typing import Any

import pandas as pd

from .crosscheck import CrosscheckReport
from .dynamics import ConvergenceDiagnostics, FiberSample
from .refutation import INTERVAL_HIGH, INTERVAL_LOW, RefutationVerdict
from .series_solver import CoefficientTable
from .symmetry import InvarianceReport
from .utils_logger import logger

FLOAT_FORMAT: str = "%.17g"


def frame_to_csv(df: pd.DataFrame) -> str:
    return df.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def to_json(record: dict[str, Any]) -> str:
    return json.dumps(record, indent=2) + "\n"


# ---------------------------------------------------------------------
# COEFFICIENT TABLES
# ---------------------------------------------------------------------


def coefficients_frame(table: CoefficientTable) -> pd.DataFrame:
    rows = []
    for n, value in enumerate(table.a):
        numerator, denominator = value.to_text()
        rows.append(
            {
                "n": n,
                "c_mode": table.c_mode,
                "numerator": numerator,
                "denominator": denominator,
                "a_n": value.render(),
            }
        )
    return pd.DataFrame(rows, columns=["n", "c_mode", "numerator", "denominator", "a_n"])


def coefficients_tex(table: CoefficientTable) -> str:
    """The nonzero even coefficients as an eqnarray* block."""
    lines = [r"\begin{eqnarray*}"]
    orders = list(range(2, table.max_order + 1, 2))
    for i, n in enumerate(orders):
        end = r" \\" if i < len(orders) - 1 else ""
        lines.append(f"a_{{{n}}} &=& {table.a[n].to_tex()}{end}")
    lines.append(r"\end{eqnarray*}")
    return "\n".join(lines) + "\n"


def coefficients_record(table: CoefficientTable) -> dict[str, Any]:
    return {
        "c_mode": table.c_mode,
        "max_order": table.max_order,
        "coefficients": [
            {"n": n, "numerator": num, "denominator": den, "text": value.render()}
            for n, value in enumerate(table.a)
            for num, den in [value.to_text()]
        ],
    }


# ---------------------------------------------------------------------
# INVARIANCE REPORTS
# ---------------------------------------------------------------------


def _b_or_witness(entry) -> str:
    if entry.b_n is not None:
        return entry.b_n.render()
    return entry.witness.render()


def invariance_frame(report: InvarianceReport) -> pd.DataFrame:
    rows = [
        {
            "n": e.n,
            "invariant": e.invariant,
            "b_n_or_witness": _b_or_witness(e),
            "matches_published_a": "" if e.matches_published_a is None else e.matches_published_a,
            "matches_published_b": "" if e.matches_published_b is None else e.matches_published_b,
        }
        for e in report.entries
    ]
    return pd.DataFrame(
        rows,
        columns=["n", "invariant", "b_n_or_witness", "matches_published_a", "matches_published_b"],
    )


def invariance_tex(report: InvarianceReport) -> str:
    lines = [r"\begin{tabular}{rll}", r"  \hline", r"  $n$ & invariant & $b_n(z)$ or witness \\", r"  \hline"]
    for e in report.entries:
        if e.b_n is not None:
            cell = f"${e.b_n.to_tex()}$"
        else:
            cell = f"$w\\cdot\\left({e.witness.odd.to_tex()}\\right)$"
        lines.append(f"  {e.n} & {'yes' if e.invariant else 'no'} & {cell} \\\\")
    lines += [r"  \hline", r"\end{tabular}"]
    return "\n".join(lines) + "\n"


def invariance_record(report: InvarianceReport) -> dict[str, Any]:
    return {
        "all_invariant": report.all_invariant,
        "entries": [
            {
                "n": e.n,
                "invariant": e.invariant,
                "b_n": None if e.b_n is None else e.b_n.render(),
                "witness": None if e.witness is None else e.witness.render(),
                "matches_published_a": e.matches_published_a,
                "matches_published_b": e.matches_published_b,
            }
            for e in report.entries
        ],
    }


# ---------------------------------------------------------------------
# VERDICT
# ---------------------------------------------------------------------


def verdict_text(verdict: RefutationVerdict) -> str:
    head = "REFUTED" if verdict.refuted else "NOT REFUTED"
    return "\n".join([f"Verdict: {head}", *verdict.narrative]) + "\n"


def verdict_record(verdict: RefutationVerdict) -> dict[str, Any]:
    return {
        "refuted": verdict.refuted,
        "delta_a6_is_zero": verdict.delta_a6_is_zero,
        "helfenstein_poly": verdict.helfenstein_poly.render(),
        "interval": [str(INTERVAL_LOW), str(INTERVAL_HIGH)],
        "roots_in_interval": verdict.roots_in_interval,
        "half_is_root": verdict.half_is_root,
        "roots_excluding_half": verdict.roots_excluding_half,
        "invariance": invariance_record(verdict.invariance),
        "narrative": list(verdict.narrative),
    }


# ---------------------------------------------------------------------
# DYNAMICS EXPORTS
# ---------------------------------------------------------------------


def trajectory_frame(diag: ConvergenceDiagnostics) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "iterate-index": range(len(diag.iterates)),
            "x": [q.x for q in diag.iterates],
            "y": [q.y for q in diag.iterates],
        }
    )


def trajectory_record(diag: ConvergenceDiagnostics) -> dict[str, Any]:
    return {
        "status": diag.status,
        "converged": diag.converged,
        "steps": diag.steps,
        "limit": [diag.limit.x, diag.limit.y],
        "empirical_ratio": diag.empirical_ratio,
        "predicted_mu": diag.predicted_mu,
        "iterates": [[q.x, q.y] for q in diag.iterates],
    }


def fiber_frame(samples: Sequence[FiberSample]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "x": s.x,
                "y0": s.y0,
                "F": s.F_value,
                "residual": s.residual,
                "image_defect": s.image_defect,
                "error": s.error or "",
            }
            for s in samples
        ],
        columns=["x", "y0", "F", "residual", "image_defect", "error"],
    )


def crosscheck_record(report: CrosscheckReport) -> dict[str, Any]:
    return {
        "c": str(report.c),
        "order": report.order,
        "y0": str(report.y0),
        "exponent": report.exponent,
        "fitted_K": report.fitted_K,
        "bound": report.bound,
        "passed": report.passed,
        "rows": report.rows.to_dict(orient="records"),
    }


def crosscheck_tex(report: CrosscheckReport) -> str:
    lines = [r"\begin{tabular}{rrrr}", r"  \hline", r"  $x$ & $F$ (dynamics) & $F$ (series) & difference \\", r"  \hline"]
    for row in report.rows.itertuples(index=False):
        lines.append(f"  {row.x:g} & {row.F_dynamics:.17g} & {row.F_series:.17g} & {row.difference:.3e} \\\\")
    lines += [r"  \hline", r"\end{tabular}", f"% K = {report.fitted_K:.6e}, exponent {report.exponent}"]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------
# OUTPUT
# ---------------------------------------------------------------------


def write_output(text: str, out: pathlib.Path | None) -> None:
    """Write to ``out``, or to stdout when no path is given."""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {len(text)} characters to {out}")


__all__ = [
    "FLOAT_FORMAT",
    "coefficients_frame",
    "coefficients_record",
    "coefficients_tex",
    "crosscheck_record",
    "crosscheck_tex",
    "fiber_frame",
    "frame_to_csv",
    "invariance_frame",
    "invariance_record",
    "invariance_tex",
    "to_json",
    "trajectory_frame",
    "trajectory_record",
    "verdict_record",
    "verdict_text",
    "write_output",
]

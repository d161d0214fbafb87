"""Series versus dynamics: the truncated Taylor sum against bisected fiber points.

Module Information:
    - Filename: crosscheck.py
    - Module: crosscheck
    - Location: src/equichordal_lab/

Key Concepts:
    - Every fiber is even in x (G_c commutes with x -> -x), so after an even order N
      the gap is O(|x|^(N+2)); after an odd order it is O(|x|^(N+1))
    - The curve over (0, 0) is the even solution f of the functional equation
    - K is the largest ratio |difference| / |x|^e over the sample points
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import pandas as pd

from .dynamics import MapParams, fiber_point
from .errors import ParameterError, UsageError
from .series_solver import CoefficientTable, solve_coefficients, solve_fiber_coefficients
from .settings import CROSSCHECK_K_BOUND, DEFAULT_MAX_ITER, DEFAULT_TOL
from .utils_logger import logger


@dataclass(frozen=True)
class CrosscheckReport:
    """Agreement of F(x, y0, c) from the dynamics with its Taylor polynomial.

    Attributes:
        c: Rational parameter.
        order: Truncation order N.
        y0: Fiber label.
        exponent: e in |difference| <= K |x|^e.
        rows: Columns x, F_dynamics, F_series, difference.
        fitted_K: Max over rows of |difference| / |x|^e.
        bound: Largest acceptable K.
    """

    c: Fraction
    order: int
    y0: Fraction
    exponent: int
    rows: pd.DataFrame
    fitted_K: float
    bound: float = CROSSCHECK_K_BOUND

    @property
    def passed(self) -> bool:
        return self.fitted_K <= self.bound


def crosscheck(
    c: Fraction,
    order: int,
    xs: Sequence[float],
    y0: Fraction = Fraction(0),
    *,
    table: CoefficientTable | None = None,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> CrosscheckReport:
    """Compare fiber_point(x, y0) with the order-N Taylor sum at each nonzero x.

    Args:
        c: Rational c in (0, 1), not 1/2.
        order: Truncation order N.
        xs: Sample abscissae (nonzero, inside the trust region).
        y0: Rational fiber label.
        table: Reuse a solved fixed or symbolic table when y0 = 0.
        tol: Projection tolerance.
        max_iter: Projection iteration cap.

    Returns:
        CrosscheckReport: per-point rows and the fitted constant.
    """
    c, y0 = Fraction(c), Fraction(y0)
    if c == Fraction(1, 2):
        raise ParameterError("The cross-check needs c != 1/2")
    if not xs or any(x == 0.0 for x in xs):
        raise UsageError("The cross-check needs at least one sample and no sample at x = 0")

    if y0 == 0:
        coeffs = (table if table is not None else solve_coefficients(order, c)).values_at(c)
    else:
        coeffs = list(solve_fiber_coefficients(order, c, y0).upper)
    exponent = order + 2 if order % 2 == 0 else order + 1

    params = MapParams(float(c))
    records = []
    for x in xs:
        sample = fiber_point(x, float(y0), params, tol, max_iter=max_iter)
        series_value = 0.0
        for value in reversed(coeffs[: order + 1]):
            series_value = series_value * x + float(value)
        records.append(
            {
                "x": x,
                "F_dynamics": sample.F_value,
                "F_series": series_value,
                "difference": abs(sample.F_value - series_value),
            }
        )
    rows = pd.DataFrame(records, columns=["x", "F_dynamics", "F_series", "difference"])
    fitted = float((rows["difference"] / rows["x"].abs() ** exponent).max())
    report = CrosscheckReport(c, order, y0, exponent, rows, fitted)
    logger.info(
        f"Cross-check at c = {c}, y0 = {y0}, N = {order}: K = {fitted:.3e} "
        f"({'within' if report.passed else 'above'} {report.bound:g})"
    )
    return report


__all__ = ["CrosscheckReport", "crosscheck"]

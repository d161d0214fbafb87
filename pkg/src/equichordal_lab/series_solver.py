"""Order-by-order solver for the chord functional equation.

A curve y = f(x) through B with f(-x) = f(x) realizes equal chords through S(0, c)
exactly when f(xi(x)) = eta(x), where (xi, eta) is the far end of the unit chord from
(x, f(x)) through S, written in the frame centered at the other endpoint A.

Module Information:
    - Filename: series_solver.py
    - Module: series_solver
    - Location: src/equichordal_lab/

Key Concepts:
    - Undetermined coefficients: the x**n coefficient of LHS - RHS is affine in a_n
      once a_0 .. a_{n-1} are known; try it at 0 and 1, solve, then confirm zero
    - Symbolic mode works over Q(c); fixed mode at a rational c uses the same code
      with constant coefficients
    - a_1 and every odd coefficient are solved, never imposed, then checked to be zero
    - The residual is recomputed along a second expansion path (power-sum composition
      and a cancellation-free form of eta) as an independent check
    - The same engine solves the coupled pair F(., y0) / F(., -y0) of the fiber family
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
import time

from .algebra import (
    RationalFunction,
    TruncatedSeries,
    series_compose,
    series_compose_by_powers,
    series_mul,
    series_recip,
    series_sqrt,
)
from .errors import InternalConsistencyError, ParameterError, SolverDegeneracyError, UsageError
from .utils_logger import logger

SOLVER_VERSION: str = "1"

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------
# TABLES
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class CoefficientTable:
    """Taylor coefficients a_0 .. a_N of the local solution f.

    Attributes:
        c: The fixed rational parameter, or None for symbolic mode.
        max_order: Highest order N held by the table.
        a: Coefficients a_0 .. a_N.
    """

    c: Fraction | None
    max_order: int
    a: tuple[RationalFunction, ...]

    def __post_init__(self) -> None:
        if len(self.a) != self.max_order + 1:
            raise UsageError(f"Table of order {self.max_order} needs {self.max_order + 1} entries")
        if not self.a[0].is_zero:
            raise InternalConsistencyError(f"a_0 must vanish (curve through B), got {self.a[0]}")
        odd = [n for n in range(1, self.max_order + 1, 2) if not self.a[n].is_zero]
        if odd:
            raise InternalConsistencyError(f"Odd coefficients must vanish, nonzero at n = {odd}")
        if self.c is not None and not all(v.is_constant for v in self.a):
            raise InternalConsistencyError("Fixed-mode table holds a non-constant coefficient")

    @classmethod
    def empty(cls, max_order: int, c: Fraction | None = None) -> CoefficientTable:
        """The table of f = 0."""
        return cls(c, max_order, (RationalFunction.zero(),) * (max_order + 1))

    @property
    def is_symbolic(self) -> bool:
        return self.c is None

    @property
    def c_mode(self) -> str:
        """``symbolic`` or ``fixed:<p>/<q>``, the key used by the cache."""
        return "symbolic" if self.c is None else f"fixed:{self.c}"

    def coefficient(self, n: int) -> RationalFunction:
        if not 0 <= n <= self.max_order:
            raise UsageError(f"Order {n} outside the table (max order {self.max_order})")
        return self.a[n]

    def series(self) -> TruncatedSeries:
        return TruncatedSeries(self.max_order, self.a)

    def truncated(self, order: int) -> CoefficientTable:
        if order > self.max_order:
            raise UsageError(f"Cannot truncate a table of order {self.max_order} to {order}")
        return CoefficientTable(self.c, order, self.a[: order + 1])

    def evaluated_at(self, c: Fraction) -> CoefficientTable:
        """Fixed-mode table obtained by evaluating every coefficient at ``c``."""
        c = Fraction(c)
        return CoefficientTable(
            c, self.max_order, tuple(RationalFunction.constant(v.evaluate(c)) for v in self.a)
        )

    def values_at(self, c: Fraction) -> list[Fraction]:
        """Exact a_n(c) for every n."""
        c = Fraction(c)
        if self.c is not None:
            if c != self.c:
                raise UsageError(f"Table is fixed at c = {self.c}, asked for c = {c}")
            return [v.constant_value() or Fraction(0) for v in self.a]
        return [v.evaluate(c) for v in self.a]


@dataclass(frozen=True)
class ResidualSeries:
    """LHS - RHS of the functional equation as a truncated series."""

    series: TruncatedSeries

    def vanishes_through(self, order: int) -> bool:
        return all(self.series[k].is_zero for k in range(order + 1))


@dataclass(frozen=True)
class FiberCoefficientTable:
    """Taylor coefficients of F(., y0, c) and F(., -y0, c) at a rational c.

    Attributes:
        c: Rational parameter, not 1/2.
        y0: Rational fiber label.
        max_order: Highest order N.
        upper: Coefficients of F(x, y0, c).
        lower: Coefficients of F(x, -y0, c).
    """

    c: Fraction
    y0: Fraction
    max_order: int
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]

    def evaluate(self, x: float, *, lower: bool = False) -> float:
        """Horner evaluation in double precision."""
        return _horner_float(self.lower if lower else self.upper, x)


# ---------------------------------------------------------------------
# EXPANSIONS
# ---------------------------------------------------------------------


def _parameter(c: Fraction | None) -> RationalFunction:
    if c is None:
        return RationalFunction.variable()
    c = Fraction(c)
    if not 0 < c < 1:
        raise ParameterError(f"c must lie in (0, 1), got {c}")
    return RationalFunction.constant(c)


def _chord_images(f: TruncatedSeries, c: RationalFunction) -> tuple[TruncatedSeries, TruncatedSeries]:
    x = TruncatedSeries.variable(f.order)
    u = (-f) + c
    radius = series_sqrt(x.shift(1) + series_mul(u, u), u[0])
    inv_radius = series_recip(radius)
    xi = inv_radius.shift(1) - x
    eta = (-series_mul(u, inv_radius)) + 1 - f
    return xi, eta


def xi_eta_series(f: TruncatedSeries, c: RationalFunction) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Expand the far chord end (xi, eta) for the curve y = f(x).

    Args:
        f: Curve through B (zero constant term).
        c: The symbol c, or a rational constant in (0, 1).

    Returns:
        (xi, eta) with xi = x / R - x and eta = -(c - f) / R + 1 - f, R = sqrt(x^2 + (c - f)^2).
    """
    if not f[0].is_zero:
        raise UsageError(f"The curve must pass through B, got f(0) = {f[0]}")
    value = c.constant_value()
    if value is not None and not 0 < value < 1:
        raise ParameterError(f"c must lie in (0, 1), got {value}")
    return _chord_images(f, c)


def _equation_residual(
    f: TruncatedSeries, g: TruncatedSeries, c: RationalFunction
) -> TruncatedSeries:
    """g(xi_f) - eta_f, where (xi_f, eta_f) are the chord images of the curve f."""
    xi, eta = _chord_images(f, c)
    return series_compose(g, xi) - eta


def residual(table: CoefficientTable) -> ResidualSeries:
    """Recompute LHS - RHS for a table along an independent expansion path.

    eta is taken in the cancellation-free form x^2 / (R (R + u)) - f and the
    composition is summed over explicit powers of xi. The sign is f(xi) - eta,
    so the table of f = 0 leaves -x^2 / (2 c^2) at order 2.
    """
    f = table.series()
    c = _parameter(table.c)
    x = TruncatedSeries.variable(table.max_order)
    u = (-f) + c
    radius = series_sqrt(x.shift(1) + series_mul(u, u), u[0])
    xi = series_mul(x, series_recip(radius) - 1)
    eta = series_mul(x.shift(1), series_recip(series_mul(radius, radius + u))) - f
    return ResidualSeries(series_compose_by_powers(f, xi) - eta)


# ---------------------------------------------------------------------
# SOLVERS
# ---------------------------------------------------------------------


def _solve_affine(order: int, trial: Callable[[RationalFunction], RationalFunction]) -> RationalFunction:
    zero, one = RationalFunction.zero(), RationalFunction.one()
    base = trial(zero)
    slope = trial(one) - base
    if slope.is_zero:
        raise SolverDegeneracyError(order, "the multiplier of the unknown vanishes identically")
    value = -base / slope
    if not trial(value).is_zero:
        raise SolverDegeneracyError(order, "the residual is not affine in the unknown")
    return value


def solve_coefficients(
    max_order: int, c: Fraction | None = None, *, verify: bool = True
) -> CoefficientTable:
    """Solve a_1 .. a_N by undetermined coefficients.

    Args:
        max_order: Highest order N (at least 2).
        c: None for symbolic mode, else a rational in (0, 1).
        verify: Also recompute the residual along the independent path.

    Returns:
        CoefficientTable: the solved table.

    Raises:
        SolverDegeneracyError: the equation for some a_n is degenerate.
        InternalConsistencyError: an odd coefficient or the residual fails to vanish.
    """
    if max_order < 2:
        raise UsageError(f"Order must be at least 2, got {max_order}")
    param = _parameter(c)
    mode = "symbolic" if c is None else f"fixed c = {Fraction(c)}"
    logger.info(f"Solving Taylor coefficients through order {max_order} ({mode})")
    started = time.perf_counter()

    coeffs = [RationalFunction.zero()] * (max_order + 1)
    for n in range(1, max_order + 1):
        head = tuple(coeffs[:n])

        def trial(unknown: RationalFunction, n: int = n, head: tuple = head) -> RationalFunction:
            f = TruncatedSeries(n, (*head, unknown))
            return _equation_residual(f, f, param)[n]

        coeffs[n] = _solve_affine(n, trial)
        if n % 2 and not coeffs[n].is_zero:
            raise InternalConsistencyError(f"Solved a_{n} = {coeffs[n]}, expected 0")
        logger.debug(
            f"a_{n} solved: numerator degree {coeffs[n].num.degree}, "
            f"denominator degree {coeffs[n].den.degree}"
        )

    table = CoefficientTable(None if c is None else Fraction(c), max_order, tuple(coeffs))
    if verify and not residual(table).vanishes_through(max_order):
        raise InternalConsistencyError("Independent residual does not vanish for the solved table")
    logger.info(f"Solved order {max_order} ({mode}) in {time.perf_counter() - started:.2f} s")
    return table


def solve_fiber_coefficients(max_order: int, c: Fraction, y0: Fraction) -> FiberCoefficientTable:
    """Solve the Taylor data of the invariant curves through (0, y0) and (0, -y0).

    The curve over y0 is mapped onto the curve over -y0 and back, which couples
    the two unknowns of each order in a 2x2 exact system with determinant mu^n - 1.
    """
    if max_order < 2:
        raise UsageError(f"Order must be at least 2, got {max_order}")
    c, y0 = Fraction(c), Fraction(y0)
    param = _parameter(c)
    if c == HALF:
        raise ParameterError("Fiber coefficients need c != 1/2 (the 2x2 system is singular)")
    if abs(y0) >= min(c, 1 - c):
        raise ParameterError(f"|y0| must be below min(c, 1 - c) = {min(c, 1 - c)}, got {y0}")
    logger.info(f"Solving fiber coefficients through order {max_order} (c = {c}, y0 = {y0})")

    zero = RationalFunction.zero()
    upper = [RationalFunction.constant(y0)] + [zero] * max_order
    lower = [RationalFunction.constant(-y0)] + [zero] * max_order
    for n in range(1, max_order + 1):

        def residuals(s: Fraction, t: Fraction, n: int = n) -> tuple[RationalFunction, RationalFunction]:
            f = TruncatedSeries(n, (*upper[:n], RationalFunction.constant(s)))
            g = TruncatedSeries(n, (*lower[:n], RationalFunction.constant(t)))
            return _equation_residual(f, g, param)[n], _equation_residual(g, f, param)[n]

        b0, b1 = residuals(Fraction(0), Fraction(0))
        s0, s1 = (r - b for r, b in zip(residuals(Fraction(1), Fraction(0)), (b0, b1)))
        t0, t1 = (r - b for r, b in zip(residuals(Fraction(0), Fraction(1)), (b0, b1)))
        det = s0 * t1 - t0 * s1
        if det.is_zero:
            raise SolverDegeneracyError(n, "the coupled fiber system is singular")
        s = ((-b0) * t1 + t0 * b1) / det
        t = ((-s0) * b1 + s1 * b0) / det
        s_value, t_value = s.constant_value(), t.constant_value()
        check = residuals(s_value, t_value)
        if not (check[0].is_zero and check[1].is_zero):
            raise SolverDegeneracyError(n, "the fiber residuals are not affine in the unknowns")
        upper[n], lower[n] = s, t

    return FiberCoefficientTable(
        c,
        y0,
        max_order,
        tuple(v.constant_value() for v in upper),
        tuple(v.constant_value() for v in lower),
    )


# ---------------------------------------------------------------------
# EVALUATION
# ---------------------------------------------------------------------


def _horner_float(values, x: float) -> float:
    acc = 0.0
    for v in reversed(values):
        acc = acc * x + float(v)
    return acc


def taylor_eval(table: CoefficientTable, c: Fraction, x: float) -> float:
    """Sum a_n(c) x^n in double precision, Horner order."""
    c = Fraction(c)
    if not 0 < c < 1:
        raise ParameterError(f"c must lie in (0, 1), got {c}")
    return _horner_float(table.values_at(c), x)


__all__ = [
    "SOLVER_VERSION",
    "CoefficientTable",
    "FiberCoefficientTable",
    "ResidualSeries",
    "residual",
    "solve_coefficients",
    "solve_fiber_coefficients",
    "taylor_eval",
    "xi_eta_series",
]

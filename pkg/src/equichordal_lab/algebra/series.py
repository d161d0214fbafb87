"""Truncated formal power series in x with rational-function coefficients.

Module Information:
    - Filename: series.py
    - Module: algebra.series
    - Location: src/equichordal_lab/algebra/

Key Concepts:
    - A series of order N keeps the coefficients of x**0 .. x**N; nothing beyond N is ever read
    - Zero coefficients are skipped in every product (the series met here are mostly even or odd)
    - Reciprocal and square root use the standard coefficient recurrences
    - Composition runs Horner in the series ring; a power-sum variant gives an independent path
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..errors import (
    BranchError,
    CompositionDomainError,
    OrderMismatchError,
    SingularSeriesError,
    UsageError,
)
from .polynomial import Scalar
from .rational_function import RationalFunction

Coefficient = RationalFunction | Scalar


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series modulo x**(order + 1).

    Attributes:
        order: Truncation order N.
        coeffs: Coefficients of x**0 .. x**N.
    """

    order: int
    coeffs: tuple[RationalFunction, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise UsageError(f"Series order must be non-negative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise UsageError(
                f"Series of order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    # ---------------------------------------------------------------
    # CONSTRUCTORS
    # ---------------------------------------------------------------

    @classmethod
    def from_coefficients(cls, values: Sequence[Coefficient], order: int) -> TruncatedSeries:
        """Build from leading coefficients, padding with zeros up to ``order``."""
        if len(values) > order + 1:
            raise UsageError(f"{len(values)} coefficients do not fit a series of order {order}")
        coeffs = [_lift(v) for v in values]
        coeffs += [RationalFunction.zero()] * (order + 1 - len(coeffs))
        return cls(order, tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls.from_coefficients([], order)

    @classmethod
    def constant(cls, value: Coefficient, order: int) -> TruncatedSeries:
        return cls.from_coefficients([value], order)

    @classmethod
    def variable(cls, order: int) -> TruncatedSeries:
        """The series x (just 0 when order is 0)."""
        return cls.from_coefficients([0, 1][: order + 1], order)

    # ---------------------------------------------------------------
    # ACCESS
    # ---------------------------------------------------------------

    def __getitem__(self, k: int) -> RationalFunction:
        return self.coeffs[k]

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for a in self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        """Drop every coefficient above ``order``."""
        if order > self.order:
            raise UsageError(f"Cannot truncate order {self.order} up to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def shift(self, k: int = 1) -> TruncatedSeries:
        """Multiply by x**k."""
        zeros = (RationalFunction.zero(),) * min(k, self.order + 1)
        return TruncatedSeries(self.order, (zeros + self.coeffs)[: self.order + 1])

    def scale(self, factor: Coefficient) -> TruncatedSeries:
        """Multiply every coefficient by a rational function."""
        factor = _lift(factor)
        return TruncatedSeries(self.order, tuple(a * factor for a in self.coeffs))

    def nonzero_terms(self) -> list[tuple[int, RationalFunction]]:
        return [(k, a) for k, a in enumerate(self.coeffs) if not a.is_zero]

    # ---------------------------------------------------------------
    # OPERATORS
    # ---------------------------------------------------------------

    def __add__(self, other: TruncatedSeries | Coefficient) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        _check_orders(self, other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: TruncatedSeries | Coefficient) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        return self + (-other)

    def __rsub__(self, other: Coefficient) -> TruncatedSeries:
        return TruncatedSeries.constant(other, self.order) - self

    def __mul__(self, other: TruncatedSeries | Coefficient) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = [f"({a})*x^{k}" for k, a in self.nonzero_terms()]
        return " + ".join(terms or ["0"]) + f" + O(x^{self.order + 1})"


def _lift(value: Coefficient) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction.constant(value)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"Series orders differ: {a.order} vs {b.order}")


# ---------------------------------------------------------------------
# SERIES OPERATIONS
# ---------------------------------------------------------------------


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at x**order."""
    _check_orders(a, b)
    n = a.order
    terms_b = b.nonzero_terms()
    buckets: list[list[RationalFunction]] = [[] for _ in range(n + 1)]
    for i, ai in a.nonzero_terms():
        for j, bj in terms_b:
            if i + j > n:
                break
            buckets[i + j].append(ai * bj)
    return TruncatedSeries(n, tuple(RationalFunction.sum(bucket) for bucket in buckets))


def series_recip(a: TruncatedSeries) -> TruncatedSeries:
    """Reciprocal r with a * r = 1 through the order of ``a``."""
    a0 = a[0]
    if a0.is_zero:
        raise SingularSeriesError("Series with zero constant term has no reciprocal")
    inv = a0.reciprocal()
    tail = [(i, ai) for i, ai in a.nonzero_terms() if i > 0]
    r = [inv]
    for k in range(1, a.order + 1):
        acc = RationalFunction.sum(ai * r[k - i] for i, ai in tail if i <= k and not r[k - i].is_zero)
        r.append(-(acc * inv))
    return TruncatedSeries(a.order, tuple(r))


def series_sqrt(a: TruncatedSeries, root0: Coefficient) -> TruncatedSeries:
    """Square root s of ``a`` on the branch with constant term ``root0``."""
    root0 = _lift(root0)
    if root0 * root0 != a[0]:
        raise BranchError(f"Branch {root0} does not square to the constant term {a[0]}")
    if root0.is_zero:
        raise SingularSeriesError("Square root recurrence needs a nonzero constant term")
    inv_two_root = (root0 * 2).reciprocal()
    s = [root0]
    for k in range(1, a.order + 1):
        # sum_{i=1}^{k-1} s_i s_{k-i}, folded by symmetry
        pairs = [s[i] * s[k - i] for i in range(1, (k + 1) // 2) if not s[i].is_zero and not s[k - i].is_zero]
        cross = RationalFunction.sum(pairs) * 2
        if k % 2 == 0 and not s[k // 2].is_zero:
            cross = cross + s[k // 2] * s[k // 2]
        s.append((a[k] - cross) * inv_two_root)
    return TruncatedSeries(a.order, tuple(s))


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(x)) truncated at the common order, by Horner's rule."""
    _check_orders(outer, inner)
    if not inner[0].is_zero:
        raise CompositionDomainError(f"Inner series has constant term {inner[0]}")
    terms = outer.nonzero_terms()
    if not terms:
        return TruncatedSeries.zero(outer.order)
    top = terms[-1][0]
    result = TruncatedSeries.constant(outer[top], outer.order)
    for k in range(top - 1, -1, -1):
        result = series_mul(result, inner)
        if not outer[k].is_zero:
            result = result + outer[k]
    return result


def series_compose_by_powers(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(x)) as an explicit sum of coefficient times power of ``inner``."""
    _check_orders(outer, inner)
    if not inner[0].is_zero:
        raise CompositionDomainError(f"Inner series has constant term {inner[0]}")
    terms = outer.nonzero_terms()
    result = TruncatedSeries.constant(outer[0], outer.order)
    if not terms:
        return result
    power = TruncatedSeries.constant(1, outer.order)
    for k in range(1, terms[-1][0] + 1):
        power = series_mul(power, inner)
        if not outer[k].is_zero:
            result = result + power.scale(outer[k])
    return result


__all__ = [
    "TruncatedSeries",
    "series_compose",
    "series_compose_by_powers",
    "series_mul",
    "series_recip",
    "series_sqrt",
]

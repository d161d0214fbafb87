"""Reduced rational functions in one variable.

Module Information:
    - Filename: rational_function.py
    - Module: algebra.rational_function
    - Location: src/equichordal_lab/algebra/

Key Concepts:
    - Canonical form: integer numerator and denominator, coprime in Z[c] including
      their integer content, denominator with positive leading coefficient, zero as 0/1
    - Canonical form is unique, so dataclass equality is mathematical equality
    - Henrici-style cross cancellation keeps intermediate degrees down
    - gcds come from sympy's dense Z[x] routines (heuristic gcd, PRS fallback)
    - Constants short-circuit to plain Fraction arithmetic, which keeps fixed-c work cheap

Storage is sympy's dense order (highest degree first); the public ``num`` and ``den``
views are ``Poly`` objects (lowest degree first).
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from sympy.polys.densearith import dup_add, dup_mul, dup_neg
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_gcd, dup_inner_gcd

from .. import settings
from ..errors import InternalConsistencyError, PoleError
from .polynomial import Poly, Scalar

Dense = list


@dataclass(frozen=True, repr=False)
class RationalFunction:
    """Element of Q(c) in canonical form.

    Attributes:
        numer: Integer numerator coefficients, highest degree first (empty for zero).
        denom: Integer denominator coefficients, highest degree first.
        var: Display name of the variable; not part of equality.
    """

    numer: tuple[int, ...]
    denom: tuple[int, ...] = (1,)
    var: str = field(default="c", compare=False)

    def __post_init__(self) -> None:
        if not self.denom:
            raise PoleError("Rational function with zero denominator")
        if self.denom[0] <= 0:
            raise ValueError(f"Denominator leading coefficient must be positive: {self.denom}")
        if settings.CHECK_CANONICAL:
            self.assert_canonical()

    # ---------------------------------------------------------------
    # CONSTRUCTORS
    # ---------------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "c") -> RationalFunction:
        """Return 0/1."""
        return cls((), (1,), var)

    @classmethod
    def one(cls, var: str = "c") -> RationalFunction:
        """Return 1/1."""
        return cls((1,), (1,), var)

    @classmethod
    def constant(cls, value: Scalar, var: str = "c") -> RationalFunction:
        """Embed an exact rational as a constant function."""
        value = Fraction(value)
        if not value:
            return cls.zero(var)
        return cls((value.numerator,), (value.denominator,), var)

    @classmethod
    def variable(cls, var: str = "c") -> RationalFunction:
        """Return the variable itself."""
        return cls((1, 0), (1,), var)

    @classmethod
    def from_polys(cls, num: Poly, den: Poly, var: str = "c") -> RationalFunction:
        """Reduce ``num / den`` with rational coefficients to canonical form."""
        if den.is_zero:
            raise PoleError(f"Denominator {den} is the zero polynomial")
        if num.is_zero:
            return cls.zero(var)
        scale_n, ints_n = num.scale_to_integers()
        scale_d, ints_d = den.scale_to_integers()
        ratio = scale_n / scale_d
        dense_n = [ratio.numerator * k for k in reversed(ints_n)]
        dense_d = [ratio.denominator * k for k in reversed(ints_d)]
        return cls._canonical(dense_n, dense_d, var)

    @classmethod
    def from_poly(cls, poly: Poly, var: str = "c") -> RationalFunction:
        """Embed a polynomial."""
        return cls.from_polys(poly, Poly.constant(1), var)

    @classmethod
    def from_text(cls, numerator: str, denominator: str, var: str = "c") -> RationalFunction:
        """Parse the canonical textual form (space-separated integers, lowest degree first)."""
        try:
            dense_n = [int(tok) for tok in reversed(numerator.split())]
            dense_d = [int(tok) for tok in reversed(denominator.split())]
        except ValueError as exc:
            raise ValueError(f"Malformed coefficient list: {numerator!r} / {denominator!r}") from exc
        return cls._canonical(dense_n, dense_d, var)

    @classmethod
    def _canonical(cls, num: Dense, den: Dense, var: str) -> RationalFunction:
        num = dup_strip(num)
        den = dup_strip(den)
        if not den:
            raise PoleError("Rational function with zero denominator")
        if not num:
            return cls.zero(var)
        _, num, den = dup_inner_gcd(num, den, ZZ)
        return cls._signed(num, den, var)

    @classmethod
    def _signed(cls, num: Dense, den: Dense, var: str) -> RationalFunction:
        if den[0] < 0:
            num = dup_neg(num, ZZ)
            den = dup_neg(den, ZZ)
        return cls(tuple(int(a) for a in num), tuple(int(a) for a in den), var)

    # ---------------------------------------------------------------
    # INSPECTION
    # ---------------------------------------------------------------

    @cached_property
    def num(self) -> Poly:
        """Numerator as a Poly (lowest degree first)."""
        return Poly.from_dense(self.numer)

    @cached_property
    def den(self) -> Poly:
        """Denominator as a Poly (lowest degree first)."""
        return Poly.from_dense(self.denom)

    @property
    def is_zero(self) -> bool:
        return not self.numer

    @property
    def is_one(self) -> bool:
        return self.numer == (1,) and self.denom == (1,)

    @property
    def is_constant(self) -> bool:
        return len(self.numer) <= 1 and len(self.denom) == 1

    @property
    def is_polynomial(self) -> bool:
        return len(self.denom) == 1

    def constant_value(self) -> Fraction | None:
        """The value as a Fraction when constant, else None."""
        if not self.is_constant:
            return None
        return Fraction(self.numer[0] if self.numer else 0, self.denom[0])

    def assert_canonical(self) -> None:
        """Raise InternalConsistencyError unless numerator and denominator are coprime."""
        if not self.numer:
            if self.denom != (1,):
                raise InternalConsistencyError(f"Zero must be stored as 0/1, got 0/{self.denom}")
            return
        g = dup_gcd(list(self.numer), list(self.denom), ZZ)
        if g != [1]:
            raise InternalConsistencyError(f"Non-canonical rational function {self}: gcd {g}")

    # ---------------------------------------------------------------
    # ARITHMETIC
    # ---------------------------------------------------------------

    def _lift(self, other: RationalFunction | Scalar) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int | Fraction):
            return RationalFunction.constant(other, self.var)
        raise TypeError(f"Cannot combine RationalFunction with {type(other).__name__}")

    def __add__(self, other: RationalFunction | Scalar) -> RationalFunction:
        other = self._lift(other)
        if not other.numer:
            return self
        if not self.numer:
            return other
        p, q = self.constant_value(), other.constant_value()
        if p is not None and q is not None:
            return RationalFunction.constant(p + q, self.var)

        a, b = list(self.numer), list(self.denom)
        c, d = list(other.numer), list(other.denom)
        if b == d:
            return RationalFunction._canonical(dup_add(a, c, ZZ), b, self.var)
        g, b1, d1 = dup_inner_gcd(b, d, ZZ)
        t = dup_add(dup_mul(a, d1, ZZ), dup_mul(c, b1, ZZ), ZZ)
        if not t:
            return RationalFunction.zero(self.var)
        if g == [1]:
            return RationalFunction._signed(t, dup_mul(b1, d, ZZ), self.var)
        # gcd(t, b1*d1*g) = gcd(t, g)
        _, t, g = dup_inner_gcd(t, g, ZZ)
        return RationalFunction._signed(t, dup_mul(dup_mul(b1, d1, ZZ), g, ZZ), self.var)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(tuple(-a for a in self.numer), self.denom, self.var)

    def __sub__(self, other: RationalFunction | Scalar) -> RationalFunction:
        return self + (-self._lift(other))

    def __rsub__(self, other: RationalFunction | Scalar) -> RationalFunction:
        return self._lift(other) - self

    def __mul__(self, other: RationalFunction | Scalar) -> RationalFunction:
        other = self._lift(other)
        if not self.numer or not other.numer:
            return RationalFunction.zero(self.var)
        p, q = self.constant_value(), other.constant_value()
        if p is not None and q is not None:
            return RationalFunction.constant(p * q, self.var)

        a, b = list(self.numer), list(self.denom)
        c, d = list(other.numer), list(other.denom)
        if d != [1]:
            _, a, d = dup_inner_gcd(a, d, ZZ)
        if b != [1]:
            _, c, b = dup_inner_gcd(c, b, ZZ)
        return RationalFunction._signed(dup_mul(a, c, ZZ), dup_mul(b, d, ZZ), self.var)

    __rmul__ = __mul__

    def reciprocal(self) -> RationalFunction:
        """Return 1/self."""
        if not self.numer:
            raise PoleError("Reciprocal of the zero rational function")
        return RationalFunction._signed(list(self.denom), list(self.numer), self.var)

    def __truediv__(self, other: RationalFunction | Scalar) -> RationalFunction:
        return self * self._lift(other).reciprocal()

    def __rtruediv__(self, other: RationalFunction | Scalar) -> RationalFunction:
        return self._lift(other) * self.reciprocal()

    def __pow__(self, exponent: int) -> RationalFunction:
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result = RationalFunction.one(self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    @staticmethod
    def sum(terms: Iterable[RationalFunction], var: str = "c") -> RationalFunction:
        """Sum an iterable of rational functions (0 for an empty iterable)."""
        total = RationalFunction.zero(var)
        for term in terms:
            total = total + term
        return total

    def with_var(self, var: str) -> RationalFunction:
        """Same element, displayed with a different variable name."""
        return RationalFunction(self.numer, self.denom, var)

    # ---------------------------------------------------------------
    # EVALUATION
    # ---------------------------------------------------------------

    def evaluate(self, value):
        """Evaluate at a Fraction (exact) or a float (double precision)."""
        den = _horner(self.denom, value)
        if not den:
            raise PoleError(f"{self} has a pole at {value}")
        return _horner(self.numer, value) / den

    # ---------------------------------------------------------------
    # TEXT FORMS
    # ---------------------------------------------------------------

    def to_text(self) -> tuple[str, str]:
        """Canonical textual form: decimal coefficient lists, lowest degree first."""
        num = " ".join(str(a) for a in reversed(self.numer)) or "0"
        den = " ".join(str(a) for a in reversed(self.denom))
        return num, den

    def render(self) -> str:
        """Plain text, e.g. ``(1)/(4*c^2 - 4*c + 2)``."""
        if self.is_polynomial and self.denom == (1,):
            return self.num.render(self.var)
        return f"({self.num.render(self.var)})/({self.den.render(self.var)})"

    def to_tex(self) -> str:
        """TeX form with the sign pulled in front of the fraction."""
        if self.denom == (1,):
            return self.num.to_tex(self.var)
        num = self.num
        sign = ""
        if num.leading_coefficient < 0:
            sign, num = "-", -num
        return f"{sign}\\frac{{{num.to_tex(self.var)}}}{{{self.den.to_tex(self.var)}}}"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RationalFunction({self.render()})"


def _horner(dense: tuple[int, ...], value):
    acc = 0
    for a in dense:
        acc = acc * value + a
    return acc


__all__ = ["RationalFunction"]

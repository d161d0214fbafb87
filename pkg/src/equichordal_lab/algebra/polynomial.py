"""Exact rationals and dense univariate polynomials over Q.

Module Information:
    - Filename: polynomial.py
    - Module: algebra.polynomial
    - Location: src/equichordal_lab/algebra/

Key Concepts:
    - ``BigRat`` is ``fractions.Fraction``: reduced, positive denominator, unbounded size
    - ``Poly`` stores coefficients lowest degree first; the zero polynomial is the empty tuple
    - Ring operations are plain dense loops; division, gcd and Sturm chains go through
      sympy's dense ``dup_*`` routines over ``QQ``
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
import math

from sympy.polys.densearith import dup_div
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_gcd

BigRat = Fraction

Scalar = int | Fraction


def as_bigrat(value: Scalar | str) -> Fraction:
    """Convert an int, Fraction, or fraction string (``"7/10"``) to a BigRat."""
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"Not an exact rational: {value!r}") from exc


@dataclass(frozen=True)
class Poly:
    """Dense polynomial in one variable with exact rational coefficients.

    Attributes:
        coeffs: Coefficients, index = degree. No trailing zeros.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        """Coerce coefficients to Fraction and strip trailing zeros."""
        coeffs = [Fraction(a) for a in self.coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # ---------------------------------------------------------------
    # CONSTRUCTORS
    # ---------------------------------------------------------------

    @classmethod
    def of(cls, *coeffs: Scalar) -> Poly:
        """Build from coefficients listed lowest degree first: ``Poly.of(1, -1)`` is 1 - c."""
        return cls(tuple(Fraction(a) for a in coeffs))

    @classmethod
    def constant(cls, value: Scalar) -> Poly:
        """Return the constant polynomial ``value``."""
        return cls((Fraction(value),))

    @classmethod
    def variable(cls) -> Poly:
        """Return the polynomial c."""
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def from_dense(cls, dense: Sequence[object]) -> Poly:
        """Build from a sympy dense list over ZZ or QQ (highest degree first)."""
        return cls(tuple(_to_fraction(a) for a in reversed(dense)))

    def to_dense_qq(self) -> list:
        """Return the sympy dense representation over QQ (highest degree first)."""
        return [QQ(a.numerator, a.denominator) for a in reversed(self.coeffs)]

    # ---------------------------------------------------------------
    # INSPECTION
    # ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of c**k (0 beyond the degree)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    # ---------------------------------------------------------------
    # RING OPERATIONS
    # ---------------------------------------------------------------

    def __add__(self, other: Poly | Scalar) -> Poly:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(n)))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-a for a in self.coeffs))

    def __sub__(self, other: Poly | Scalar) -> Poly:
        return self + (-_coerce(other))

    def __rsub__(self, other: Poly | Scalar) -> Poly:
        return _coerce(other) - self

    def __mul__(self, other: Poly | Scalar) -> Poly:
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            raise ValueError(f"Negative power of a polynomial: {exponent}")
        result = Poly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero:
            raise ZeroDivisionError("Polynomial division by the zero polynomial")
        q, r = dup_div(self.to_dense_qq(), other.to_dense_qq(), QQ)
        return Poly.from_dense(q), Poly.from_dense(r)

    def gcd(self, other: Poly) -> Poly:
        """Monic greatest common divisor over Q."""
        return Poly.from_dense(dup_gcd(self.to_dense_qq(), other.to_dense_qq(), QQ))

    # ---------------------------------------------------------------
    # EVALUATION AND SUBSTITUTION
    # ---------------------------------------------------------------

    def evaluate(self, value):
        """Horner evaluation; exact for Fraction input, double for float input."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    def compose(self, inner: Poly) -> Poly:
        """Return self(inner(c))."""
        result = Poly()
        for a in reversed(self.coeffs):
            result = result * inner + a
        return result

    def derivative(self) -> Poly:
        """Formal derivative."""
        return Poly(tuple(k * a for k, a in enumerate(self.coeffs) if k))

    def scale_to_integers(self) -> tuple[Fraction, list[int]]:
        """Split into ``scale * primitive`` with a primitive integer polynomial.

        The integer polynomial (lowest degree first) has coprime coefficients and a
        positive leading coefficient; ``scale`` carries the sign and content.
        """
        if self.is_zero:
            return Fraction(0), []
        denominator = math.lcm(*(a.denominator for a in self.coeffs))
        ints = [int(a * denominator) for a in self.coeffs]
        content = math.gcd(*ints)
        if ints[-1] < 0:
            content = -content
        return Fraction(content, denominator), [k // content for k in ints]

    # ---------------------------------------------------------------
    # RENDERING
    # ---------------------------------------------------------------

    def render(self, var: str = "c") -> str:
        """Plain text form, highest degree first, e.g. ``4*c^2 - 4*c + 2``."""
        return _render_terms(self.coeffs, var, tex=False)

    def to_tex(self, var: str = "c") -> str:
        """TeX form, highest degree first, e.g. ``4c^{2}-4c+2``."""
        return _render_terms(self.coeffs, var, tex=True)

    def __str__(self) -> str:
        return self.render()


def _to_fraction(value: object) -> Fraction:
    numerator = getattr(value, "numerator", value)
    denominator = getattr(value, "denominator", 1)
    return Fraction(int(numerator), int(denominator))  # type: ignore[arg-type]


def _coerce(value: Poly | Scalar) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, int | Fraction):
        return Poly.constant(value)
    raise TypeError(f"Cannot combine Poly with {type(value).__name__}")


def _render_terms(coeffs: Iterable[Fraction], var: str, *, tex: bool) -> str:
    terms = [(k, a) for k, a in enumerate(coeffs) if a]
    if not terms:
        return "0"
    pieces: list[str] = []
    for k, a in reversed(terms):
        sign = "-" if a < 0 else "+"
        magnitude = abs(a)
        if k == 0:
            body = _render_scalar(magnitude, tex=tex)
        else:
            power = var if k == 1 else (f"{var}^{{{k}}}" if tex else f"{var}^{k}")
            if magnitude == 1:
                body = power
            else:
                joiner = "" if tex else "*"
                body = f"{_render_scalar(magnitude, tex=tex)}{joiner}{power}"
        if not pieces:
            pieces.append(f"-{body}" if sign == "-" else body)
        elif tex:
            pieces.append(f"{sign}{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def _render_scalar(value: Fraction, *, tex: bool) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    if tex:
        return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"
    return f"({value.numerator}/{value.denominator})"


__all__ = ["BigRat", "Poly", "as_bigrat"]

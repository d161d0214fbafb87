"""Substitution into rational functions, including the quadratic extension w**2 = z.

Module Information:
    - Filename: extension.py
    - Module: algebra.extension
    - Location: src/equichordal_lab/algebra/

Key Concepts:
    - An extension element is stored as (even part, odd part): e(z) + w * o(z)
    - Division clears w from the denominator with the conjugate e - w * o
    - "Analytic in z" becomes a literal test: the odd part is the zero function
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import PoleError
from .polynomial import Poly
from .rational_function import RationalFunction

Z = Poly.variable()


@dataclass(frozen=True)
class QuadraticElement:
    """Element ``even + w * odd`` of Q(z)[w] / (w**2 - z).

    Attributes:
        even: Part free of w, a rational function of z.
        odd: Coefficient of w, a rational function of z.
    """

    even: RationalFunction
    odd: RationalFunction

    @property
    def is_rational_in_z(self) -> bool:
        """True when the odd part vanishes identically."""
        return self.odd.is_zero

    def render(self) -> str:
        return f"{self.even} + w*({self.odd})"


# c = (1 + w) / 2, the point where b_n is read off
HALF_PLUS_HALF_W = QuadraticElement(
    RationalFunction.constant(Fraction(1, 2), "z"),
    RationalFunction.constant(Fraction(1, 2), "z"),
)

REFLECTION = Poly.of(1, -1)


def ratfunc_substitute(r: RationalFunction, s: Poly | QuadraticElement):
    """Replace the variable of ``r`` by ``s`` and renormalize.

    Args:
        r: Rational function in c.
        s: A polynomial in c (e.g. 1 - c), or an element of the extension whose
            parts are polynomials in z.

    Returns:
        RationalFunction when ``s`` is a Poly, QuadraticElement otherwise.

    Raises:
        PoleError: the substituted denominator vanishes identically.
    """
    if isinstance(s, Poly):
        den = r.den.compose(s)
        if den.is_zero:
            raise PoleError(f"Denominator of {r} vanishes under c -> {s}")
        return RationalFunction.from_polys(r.num.compose(s), den, r.var)

    s_even, s_odd = _polynomial_part(s.even), _polynomial_part(s.odd)
    num_even, num_odd = _evaluate_in_extension(r.num, s_even, s_odd)
    den_even, den_odd = _evaluate_in_extension(r.den, s_even, s_odd)
    # (A + wB)/(C + wD) = (A + wB)(C - wD) / (C^2 - z D^2)
    norm = den_even * den_even - Z * den_odd * den_odd
    if norm.is_zero:
        raise PoleError(f"Denominator of {r} vanishes in the extension")
    even = num_even * den_even - Z * num_odd * den_odd
    odd = num_odd * den_even - num_even * den_odd
    return QuadraticElement(
        RationalFunction.from_polys(even, norm, "z"),
        RationalFunction.from_polys(odd, norm, "z"),
    )


def _polynomial_part(part: RationalFunction) -> Poly:
    if not part.is_polynomial:
        raise ValueError(f"Extension substitution needs polynomial parts, got {part}")
    return part.num * (1 / part.den.leading_coefficient)


def _evaluate_in_extension(poly: Poly, s_even: Poly, s_odd: Poly) -> tuple[Poly, Poly]:
    """Horner evaluation of ``poly`` at ``s_even + w * s_odd``."""
    even, odd = Poly(), Poly()
    for a in reversed(poly.coeffs):
        even, odd = even * s_even + Z * odd * s_odd + a, even * s_odd + odd * s_even
    return even, odd


__all__ = ["HALF_PLUS_HALF_W", "QuadraticElement", "REFLECTION", "ratfunc_substitute"]

"""The degree-9 polynomial versus the exact symmetry of a_6.

If a_6(c) - a_6(1 - c) is the zero function, no nontrivial polynomial equation in c
can be equivalent to a_6(c) = a_6(1 - c). The historical polynomial is kept as data
and its real roots are counted exactly with Sturm chains.

Module Information:
    - Filename: refutation.py
    - Module: refutation
    - Location: src/equichordal_lab/

Key Concepts:
    - Sturm chains over Q from sympy, sign variations evaluated exactly
    - Endpoints that are roots are nudged inward by an isolating rational step
    - Irrational endpoints (a + b*sqrt(d))/q are bracketed by decimal square roots,
      refined until the inner and outer brackets give the same count
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from sympy.polys.domains import QQ
from sympy.polys.rootisolation import dup_sturm

from .algebra import Poly, RationalFunction
from .errors import InternalConsistencyError, UsageError
from .series_solver import CoefficientTable
from .symmetry import InvarianceReport, check_invariance, reflect_c
from .utils_logger import logger

HALF = Fraction(1, 2)

# 144c^9 - 648c^8 + 1176c^7 - 1092c^6 + 168c^5 + 798c^4 - 846c^3 + 357c^2 - 59c + 1
HELFENSTEIN_COEFFS: tuple[int, ...] = (1, -59, 357, -846, 798, 168, -1092, 1176, -648, 144)


@dataclass(frozen=True)
class SurdBound:
    """The real number (a + b*sqrt(d)) / q with d > 0 not a perfect square and q > 0."""

    a: int
    b: int
    d: int
    q: int

    def __post_init__(self) -> None:
        if self.d <= 0 or math.isqrt(self.d) ** 2 == self.d:
            raise UsageError(f"sqrt({self.d}) must be irrational")
        if self.q <= 0:
            raise UsageError(f"Denominator must be positive, got {self.q}")

    def bracket(self, digits: int) -> tuple[Fraction, Fraction]:
        """Rational lower and upper bounds from sqrt(d) truncated to ``digits`` decimals."""
        scale = 10**digits
        s = math.isqrt(self.d * scale * scale)
        root_lo, root_hi = Fraction(s, scale), Fraction(s + 1, scale)
        ends = sorted(Fraction(self.a + self.b * r, self.q) for r in (root_lo, root_hi))
        return ends[0], ends[1]

    def __float__(self) -> float:
        return (self.a + self.b * math.sqrt(self.d)) / self.q

    def __str__(self) -> str:
        sign = "+" if self.b >= 0 else "-"
        return f"({self.a} {sign} {abs(self.b)}*sqrt({self.d}))/{self.q}"


Endpoint = Fraction | SurdBound | None

# (2 - sqrt(3))/4 and (2 + sqrt(3))/4
INTERVAL_LOW = SurdBound(2, -1, 3, 4)
INTERVAL_HIGH = SurdBound(2, 1, 3, 4)


@dataclass(frozen=True)
class RefutationVerdict:
    """Bundle of the exact findings.

    Attributes:
        delta_a6_is_zero: a_6(c) - a_6(1 - c) is the zero function.
        helfenstein_poly: The transcribed degree-9 polynomial.
        roots_in_interval: Distinct real roots in ((2 - sqrt 3)/4, (2 + sqrt 3)/4).
        half_is_root: Whether c = 1/2 is a root of that polynomial.
        roots_excluding_half: Root count in the interval with c = 1/2 removed.
        invariance: Invariance report for even n <= min(N, 10).
        narrative: Findings in reading order.
    """

    delta_a6_is_zero: bool
    helfenstein_poly: Poly
    roots_in_interval: int
    half_is_root: bool
    roots_excluding_half: int
    invariance: InvarianceReport
    narrative: tuple[str, ...]

    @property
    def refuted(self) -> bool:
        return self.delta_a6_is_zero and not self.helfenstein_poly.is_zero


def helfenstein_poly() -> Poly:
    """The published degree-9 polynomial, as transcribed."""
    return Poly.of(*HELFENSTEIN_COEFFS)


def reflection_defect(r: RationalFunction) -> RationalFunction:
    """r(c) - r(1 - c)."""
    return r - reflect_c(r)


def delta_an(n: int, table: CoefficientTable) -> RationalFunction:
    """a_n(c) - a_n(1 - c) for a symbolic table."""
    if not table.is_symbolic:
        raise UsageError("delta_an needs a symbolic table")
    return reflection_defect(table.coefficient(n))


# ---------------------------------------------------------------------
# STURM COUNTING
# ---------------------------------------------------------------------


def sturm_chain(p: Poly) -> list[Poly]:
    return [Poly.from_dense(g) for g in dup_sturm(p.to_dense_qq(), QQ)]


def _sign_at(poly: Poly, point: Fraction | None, direction: int) -> int:
    if point is None:
        sign = 1 if poly.leading_coefficient > 0 else -1
        return sign * (direction**poly.degree)
    value = poly.evaluate(point)
    return (value > 0) - (value < 0)


def _variations(chain: list[Poly], point: Fraction | None, direction: int = 1) -> int:
    signs = [s for s in (_sign_at(g, point, direction) for g in chain) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _count_open(chain: list[Poly], lo: Fraction | None, hi: Fraction | None) -> int:
    return _variations(chain, lo, -1) - _variations(chain, hi, 1)


def _exclude_root(p: Poly, chain: list[Poly], point: Fraction, inward: int, room: Fraction) -> Fraction:
    """Move a root endpoint inward past the root and no further than the next root."""
    delta = room / 4
    while True:
        left, right = point - delta, point + delta
        if p.evaluate(left) and p.evaluate(right) and _count_open(chain, left, right) == 1:
            return point + inward * delta
        delta /= 2


def _count_rational(p: Poly, chain: list[Poly], lo: Fraction | None, hi: Fraction | None) -> int:
    if lo is not None and hi is not None and lo >= hi:
        raise UsageError(f"Empty interval ({lo}, {hi})")
    room = (hi - lo) if lo is not None and hi is not None else Fraction(1)
    if lo is not None and not p.evaluate(lo):
        lo = _exclude_root(p, chain, lo, 1, room)
    if hi is not None and not p.evaluate(hi):
        hi = _exclude_root(p, chain, hi, -1, room)
    return _count_open(chain, lo, hi)


def count_real_roots(p: Poly, lo: Endpoint = None, hi: Endpoint = None, *, max_digits: int = 128) -> int:
    """Count distinct real roots of ``p`` in the open interval (lo, hi).

    Args:
        p: Nonzero polynomial.
        lo: Rational, surd, or None for minus infinity.
        hi: Rational, surd, or None for plus infinity.
        max_digits: Refinement limit for surd endpoints.

    Returns:
        int: The exact count.
    """
    if p.is_zero:
        raise UsageError("Cannot count roots of the zero polynomial")
    chain = sturm_chain(p)
    if not isinstance(lo, SurdBound) and not isinstance(hi, SurdBound):
        return _count_rational(p, chain, lo, hi)

    digits = 4
    while digits <= max_digits:
        lo_in, lo_out = _bracket_ends(lo, digits, lower=True)
        hi_in, hi_out = _bracket_ends(hi, digits, lower=False)
        inner = _count_rational(p, chain, lo_in, hi_in)
        outer = _count_rational(p, chain, lo_out, hi_out)
        logger.debug(f"Sturm bracket at {digits} digits: inner {inner}, outer {outer}")
        if inner == outer:
            return inner
        digits *= 2
    raise InternalConsistencyError(f"Root count did not stabilize within {max_digits} digits")


def _bracket_ends(end: Endpoint, digits: int, *, lower: bool) -> tuple[Fraction | None, Fraction | None]:
    """(inner, outer) rational replacements for an endpoint."""
    if not isinstance(end, SurdBound):
        return end, end
    below, above = end.bracket(digits)
    return (above, below) if lower else (below, above)


# ---------------------------------------------------------------------
# REPORT
# ---------------------------------------------------------------------


def refutation_report(table: CoefficientTable) -> RefutationVerdict:
    """Bundle the exact symmetry of a_6 with the root count of the degree-9 polynomial."""
    if not table.is_symbolic or table.max_order < 6:
        raise UsageError("The refutation needs a symbolic table through order at least 6")
    delta6 = delta_an(6, table)
    p = helfenstein_poly()
    roots = count_real_roots(p, INTERVAL_LOW, INTERVAL_HIGH)
    half_is_root = not p.evaluate(HALF)
    roots_without_half = count_real_roots(p, INTERVAL_LOW, HALF) + count_real_roots(p, HALF, INTERVAL_HIGH)
    if not half_is_root:
        roots_without_half = roots
    invariance = check_invariance(table.truncated(min(table.max_order, 10)))

    narrative = [
        f"a_6(c) - a_6(1 - c) = {delta6}: "
        + ("identically zero." if delta6.is_zero else "NOT identically zero."),
        f"Transcribed polynomial (degree {p.degree}): {p}.",
        f"Distinct real roots in ({INTERVAL_LOW}, {INTERVAL_HIGH}): {roots}.",
        f"c = 1/2 is {'a root' if half_is_root else 'not a root'}; "
        f"roots in the interval other than 1/2: {roots_without_half}.",
        "Even n <= "
        f"{invariance.entries[-1].n}: a_n invariant under c -> 1 - c for all n = {invariance.all_invariant}.",
    ]
    if delta6.is_zero and not p.is_zero:
        narrative.append(
            "Since a_6(c) - a_6(1 - c) is the zero function, no nontrivial polynomial equation in c "
            "is equivalent to a_6(c) = a_6(1 - c); the degree-9 polynomial cannot follow from it."
        )
    verdict = RefutationVerdict(
        delta_a6_is_zero=delta6.is_zero,
        helfenstein_poly=p,
        roots_in_interval=roots,
        half_is_root=half_is_root,
        roots_excluding_half=roots_without_half,
        invariance=invariance,
        narrative=tuple(narrative),
    )
    logger.info(f"Refutation verdict: refuted = {verdict.refuted}, roots in interval = {roots}")
    return verdict


__all__ = [
    "HELFENSTEIN_COEFFS",
    "INTERVAL_HIGH",
    "INTERVAL_LOW",
    "RefutationVerdict",
    "SurdBound",
    "count_real_roots",
    "delta_an",
    "helfenstein_poly",
    "reflection_defect",
    "refutation_report",
    "sturm_chain",
]

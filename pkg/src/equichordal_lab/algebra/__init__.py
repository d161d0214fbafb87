"""Exact arithmetic kernel: rationals, polynomials, rational functions, truncated series."""

from .extension import HALF_PLUS_HALF_W, REFLECTION, QuadraticElement, ratfunc_substitute
from .polynomial import BigRat, Poly, as_bigrat
from .rational_function import RationalFunction
from .series import (
    TruncatedSeries,
    series_compose,
    series_compose_by_powers,
    series_mul,
    series_recip,
    series_sqrt,
)

__all__ = [
    "HALF_PLUS_HALF_W",
    "REFLECTION",
    "BigRat",
    "Poly",
    "QuadraticElement",
    "RationalFunction",
    "TruncatedSeries",
    "as_bigrat",
    "ratfunc_substitute",
    "series_compose",
    "series_compose_by_powers",
    "series_mul",
    "series_recip",
    "series_sqrt",
]

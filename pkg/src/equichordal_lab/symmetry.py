"""Exact invariance checks of a_n(c) under c -> 1 - c.

Two tests run side by side and must agree: the direct one compares a_n with its
reflection, the other substitutes c = (1 + w) / 2 with w**2 = z and asks whether
the result is free of w (then b_n(z) is the w-free part).

Module Information:
    - Filename: symmetry.py
    - Module: symmetry
    - Location: src/equichordal_lab/
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import HALF_PLUS_HALF_W, REFLECTION, RationalFunction, ratfunc_substitute
from .errors import InternalConsistencyError, UsageError
from .published import matches_published
from .series_solver import CoefficientTable
from .utils_logger import logger


@dataclass(frozen=True)
class OddPartWitness:
    """Nonzero coefficient of w left after substituting c = (1 + w) / 2."""

    odd: RationalFunction

    def render(self) -> str:
        return f"w*({self.odd})"


@dataclass(frozen=True)
class InvarianceEntry:
    """Verdict for one order n."""

    n: int
    invariant: bool
    b_n: RationalFunction | None
    witness: OddPartWitness | None
    matches_published_a: bool | None = None
    matches_published_b: bool | None = None


@dataclass(frozen=True)
class InvarianceReport:
    """Per-order invariance verdicts for a symbolic table."""

    entries: tuple[InvarianceEntry, ...]

    @property
    def all_invariant(self) -> bool:
        return all(e.invariant for e in self.entries)

    def entry(self, n: int) -> InvarianceEntry:
        for e in self.entries:
            if e.n == n:
                return e
        raise KeyError(n)


def reflect_c(r: RationalFunction) -> RationalFunction:
    """r(1 - c) in canonical form."""
    return ratfunc_substitute(r, REFLECTION)


def to_b(r: RationalFunction) -> RationalFunction | OddPartWitness:
    """b(z) = r((1 + sqrt(z)) / 2) when that is rational in z, else the odd-part witness."""
    image = ratfunc_substitute(r, HALF_PLUS_HALF_W)
    if image.is_rational_in_z:
        return image.even
    return OddPartWitness(image.odd)


def check_invariance(table: CoefficientTable) -> InvarianceReport:
    """Run both invariance tests for every even order of a symbolic table."""
    if not table.is_symbolic:
        raise UsageError("Invariance checks need a symbolic table")
    entries = []
    for n in range(2, table.max_order + 1, 2):
        a_n = table.a[n]
        direct = (a_n - reflect_c(a_n)).is_zero
        b_form = to_b(a_n)
        via_z = isinstance(b_form, RationalFunction)
        if direct != via_z:
            raise InternalConsistencyError(
                f"Invariance tests disagree at n = {n}: reflection says {direct}, z-form says {via_z}"
            )
        b_n = b_form if isinstance(b_form, RationalFunction) else None
        entries.append(
            InvarianceEntry(
                n=n,
                invariant=direct,
                b_n=b_n,
                witness=None if isinstance(b_form, RationalFunction) else b_form,
                matches_published_a=matches_published("a", n, a_n),
                matches_published_b=None if b_n is None else matches_published("b", n, b_n),
            )
        )
        logger.debug(f"n = {n}: invariant = {direct}")
    report = InvarianceReport(tuple(entries))
    logger.info(
        f"Invariance checked for even n <= {table.max_order}: all invariant = {report.all_invariant}"
    )
    return report


__all__ = [
    "InvarianceEntry",
    "InvarianceReport",
    "OddPartWitness",
    "check_invariance",
    "reflect_c",
    "to_b",
]

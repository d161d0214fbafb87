"""Test truncated power series over Q(c).

Module Information:
    - Filename: test_series.py
    - Module: test_series
    - Location: tests/
"""

from fractions import Fraction
import random

import pytest

from equichordal_lab.algebra import (
    RationalFunction,
    TruncatedSeries,
    series_compose,
    series_compose_by_powers,
    series_mul,
    series_recip,
    series_sqrt,
)
from equichordal_lab.errors import (
    BranchError,
    CompositionDomainError,
    OrderMismatchError,
    SingularSeriesError,
)

C = RationalFunction.variable()


def constants(series):
    return [a.constant_value() for a in series.coeffs]


def test_reciprocal_of_one_minus_x():
    s = TruncatedSeries.from_coefficients([1, -1], 5)
    assert constants(series_recip(s)) == [1] * 6


def test_square_root_of_one_plus_x():
    s = TruncatedSeries.from_coefficients([1, 1], 4)
    root = series_sqrt(s, 1)
    assert constants(root) == [1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16), Fraction(-5, 128)]
    assert series_mul(root, root) == s


def test_symbolic_square_root_uses_given_branch():
    # sqrt(c^2 + x^2) on the branch +c
    s = TruncatedSeries.from_coefficients([C * C, 0, 1], 4)
    root = series_sqrt(s, C)
    assert root[0] == C
    assert root[2] == 1 / (C * 2)
    assert series_mul(root, root) == s


def test_composition_two_ways():
    outer = TruncatedSeries.from_coefficients([1, C, 1, 0, C * C], 6)
    inner = TruncatedSeries.from_coefficients([0, 1, C], 6)
    composed = series_compose(outer, inner)
    assert composed == series_compose_by_powers(outer, inner)
    assert composed[1] == C
    assert composed[2] == C * C + 1


def test_shift_truncate_and_operators():
    x = TruncatedSeries.variable(3)
    assert x.shift(1) == TruncatedSeries.from_coefficients([0, 0, 1], 3)
    assert x.shift(5).is_zero
    assert (x * x).truncate(2) == TruncatedSeries.from_coefficients([0, 0, 1], 2)
    assert (1 - x)[0].is_one
    assert (x * C)[1] == C


def test_errors():
    with pytest.raises(SingularSeriesError):
        series_recip(TruncatedSeries.variable(3))
    with pytest.raises(BranchError):
        series_sqrt(TruncatedSeries.constant(4, 2), 3)
    with pytest.raises(CompositionDomainError):
        series_compose(TruncatedSeries.variable(2), TruncatedSeries.constant(1, 2))
    with pytest.raises(OrderMismatchError):
        TruncatedSeries.variable(2) + TruncatedSeries.variable(3)


def random_series(rng, order, *, unit=False, constant_term=None):
    """Small random coefficients a + b*c; a unit gets a nonzero constant term."""
    coeffs = [C * rng.randint(-2, 2) + Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(order + 1)]
    if constant_term is not None:
        coeffs[0] = constant_term
    elif unit:
        coeffs[0] = C * rng.randint(0, 2) + Fraction(rng.randint(1, 5), rng.randint(1, 3))
    return TruncatedSeries.from_coefficients(coeffs, order)


@pytest.mark.parametrize("seed", range(5))
def test_ring_laws_on_random_inputs(seed):
    rng = random.Random(seed)
    a, b, d = (random_series(rng, 5) for _ in range(3))
    assert series_mul(series_mul(a, b), d) == series_mul(a, series_mul(b, d))
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(a, b + d) == series_mul(a, b) + series_mul(a, d)

    u = random_series(rng, 5, unit=True)
    assert series_mul(u, series_recip(u)) == TruncatedSeries.constant(1, 5)
    assert series_recip(series_recip(u)) == u


@pytest.mark.parametrize("seed", range(5))
def test_square_root_on_random_inputs(seed):
    rng = random.Random(seed)
    r0 = C + rng.randint(1, 3)
    root = random_series(rng, 5, constant_term=r0)
    square = series_mul(root, root)
    assert series_sqrt(square, r0) == root
    assert series_mul(series_sqrt(square, r0), series_sqrt(square, r0)) == square


@pytest.mark.parametrize("seed", range(3))
def test_truncation_is_consistent(seed):
    rng = random.Random(seed)
    a, b = random_series(rng, 7), random_series(rng, 7)
    u = random_series(rng, 7, unit=True)
    inner = random_series(rng, 7, constant_term=0)
    for low in (2, 4):
        assert series_mul(a, b).truncate(low) == series_mul(a.truncate(low), b.truncate(low))
        assert series_recip(u).truncate(low) == series_recip(u.truncate(low))
        assert series_compose(a, inner).truncate(low) == series_compose(
            a.truncate(low), inner.truncate(low)
        )

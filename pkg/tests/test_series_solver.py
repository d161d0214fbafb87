"""Test the order-by-order solver of the chord functional equation.

Module Information:
    - Filename: test_series_solver.py
    - Module: test_series_solver
    - Location: tests/
"""

from fractions import Fraction

import pytest

from equichordal_lab import settings
from equichordal_lab.algebra import Poly, RationalFunction, TruncatedSeries
from equichordal_lab.errors import ParameterError, UsageError
from equichordal_lab.published import A2_AT_HALF, PUBLISHED_A
from equichordal_lab.series_solver import (
    CoefficientTable,
    residual,
    solve_coefficients,
    solve_fiber_coefficients,
    taylor_eval,
    xi_eta_series,
)
from equichordal_lab.symmetry import reflect_c

C = RationalFunction.variable()


def test_half_gives_the_circle_of_diameter_one():
    # y = (1 - sqrt(1 - 4x^2)) / 2, so a_{2k} is the Catalan number C_{k-1}
    table = solve_coefficients(10, Fraction(1, 2))
    values = table.values_at(Fraction(1, 2))
    assert [values[n] for n in (2, 4, 6, 8, 10)] == [1, 1, 2, 5, 14]
    assert values[2] == A2_AT_HALF
    assert PUBLISHED_A[2].evaluate(Fraction(1, 2)) == A2_AT_HALF


def test_odd_coefficients_vanish(symbolic_table):
    assert all(symbolic_table.coefficient(n).is_zero for n in range(1, 11, 2))
    assert symbolic_table.coefficient(0).is_zero


def test_printed_coefficients(symbolic_table):
    for n in (2, 4, 6):
        assert symbolic_table.coefficient(n) == PUBLISHED_A[n]


def test_residual_vanishes(symbolic_table):
    assert residual(symbolic_table).vanishes_through(10)


def test_perturbed_table_leaves_a_residual(symbolic_table):
    a = list(symbolic_table.truncated(4).a)
    a[2] = a[2] + 1
    res = residual(CoefficientTable(None, 4, tuple(a)))
    assert not res.series[2].is_zero


def test_residual_of_the_empty_table():
    res = residual(CoefficientTable.empty(4))
    assert res.series[2] == -1 / (C * C * 2)
    assert res.series[1].is_zero


def test_xi_to_first_order():
    xi, eta = xi_eta_series(TruncatedSeries.zero(3), C)
    assert xi[1] == 1 / C - 1
    assert eta[2] == 1 / (C * C * 2)
    with pytest.raises(UsageError):
        xi_eta_series(TruncatedSeries.constant(1, 3), C)


@pytest.mark.parametrize("c", [Fraction(7, 10), Fraction(1, 3), Fraction(5, 8)])
def test_fixed_mode_matches_symbolic_evaluation(symbolic_table, c):
    fixed = solve_coefficients(8, c)
    assert fixed.a == symbolic_table.truncated(8).evaluated_at(c).a


def test_determinism():
    assert solve_coefficients(6, Fraction(2, 7)) == solve_coefficients(6, Fraction(2, 7))


def test_invalid_arguments():
    with pytest.raises(UsageError):
        solve_coefficients(1)
    with pytest.raises(ParameterError):
        solve_coefficients(4, Fraction(0))
    with pytest.raises(ParameterError):
        solve_coefficients(4, Fraction(1))
    with pytest.raises(UsageError):
        CoefficientTable.empty(4).coefficient(5)


def test_a2_values(table_at_seven_tenths):
    values = table_at_seven_tenths.values_at(Fraction(7, 10))
    assert float(values[2]) == pytest.approx(0.862, abs=1e-3)
    assert float(values[4]) == pytest.approx(0.705, abs=1e-3)
    with pytest.raises(UsageError):
        table_at_seven_tenths.values_at(Fraction(1, 3))


def test_taylor_eval(table_at_seven_tenths):
    c = Fraction(7, 10)
    assert taylor_eval(table_at_seven_tenths, c, 0.0) == 0.0
    assert taylor_eval(table_at_seven_tenths, c, 0.05) == taylor_eval(table_at_seven_tenths, c, -0.05)
    assert taylor_eval(table_at_seven_tenths, c, 0.05) == pytest.approx(0.862 * 0.0025, rel=1e-2)


def test_fiber_through_origin_is_the_solution(table_at_seven_tenths):
    fiber = solve_fiber_coefficients(8, Fraction(7, 10), Fraction(0))
    expected = table_at_seven_tenths.values_at(Fraction(7, 10))[:9]
    assert list(fiber.upper) == expected
    assert list(fiber.lower) == expected


def test_fiber_coefficients_off_the_axis_point():
    y0 = Fraction(1, 20)
    fiber = solve_fiber_coefficients(6, Fraction(7, 10), y0)
    assert fiber.upper[0] == y0
    assert fiber.lower[0] == -y0
    # tangent to the x-axis, and even in x
    assert all(fiber.upper[n] == 0 for n in (1, 3, 5))
    assert all(fiber.lower[n] == 0 for n in (1, 3, 5))
    assert fiber.evaluate(0.0) == pytest.approx(0.05)


def test_fiber_arguments():
    with pytest.raises(ParameterError):
        solve_fiber_coefficients(4, Fraction(1, 2), Fraction(0))
    with pytest.raises(ParameterError):
        solve_fiber_coefficients(4, Fraction(7, 10), Fraction(3, 10))


@pytest.mark.slow
def test_order_twenty_is_symmetric():
    table = solve_coefficients(20)
    for n in range(2, 21, 2):
        a_n = table.coefficient(n)
        assert a_n == reflect_c(a_n)


def test_published_a2_value():
    assert PUBLISHED_A[2] == RationalFunction.from_polys(Poly.of(1), Poly.of(2, -4, 4))


def test_higher_order_tables_truncate_to_lower_ones(symbolic_table, table_at_seven_tenths):
    for low in (2, 4, 6, 8):
        assert solve_coefficients(low) == symbolic_table.truncated(low)
        assert solve_coefficients(low, Fraction(7, 10)) == table_at_seven_tenths.truncated(low)
    fiber = solve_fiber_coefficients(8, Fraction(7, 10), Fraction(1, 20))
    assert solve_fiber_coefficients(4, Fraction(7, 10), Fraction(1, 20)).upper == fiber.upper[:5]


def test_solver_under_the_canonical_form_check(monkeypatch):
    monkeypatch.setattr(settings, "CHECK_CANONICAL", True)
    table = solve_coefficients(6)
    assert table.a[2] == PUBLISHED_A[2]
    assert residual(table).vanishes_through(6)

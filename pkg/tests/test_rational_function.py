"""Test canonical rational functions over Q(c).

Module Information:
    - Filename: test_rational_function.py
    - Module: test_rational_function
    - Location: tests/

Canonical form: integer numerator and denominator, coprime in Z[c], positive
leading coefficient in the denominator. Structural equality is then equality.
"""

from fractions import Fraction

import pytest

from equichordal_lab import settings
from equichordal_lab.algebra import Poly, RationalFunction
from equichordal_lab.errors import InternalConsistencyError, PoleError

C = RationalFunction.variable()


def test_common_factors_cancel():
    r = RationalFunction.from_polys(Poly.of(-1, 0, 1), Poly.of(-1, 1))
    assert r.numer == (1, 1)
    assert r.denom == (1,)


def test_integer_content_cancels():
    r = RationalFunction.from_polys(Poly.of(2), Poly.of(4, 2))
    assert r.numer == (1,)
    assert r.denom == (1, 2)


def test_denominator_sign_is_positive():
    r = RationalFunction.from_polys(Poly.of(1), Poly.of(0, -1))
    assert r.numer == (-1,)
    assert r.denom == (1, 0)


def test_rational_coefficients_are_cleared():
    r = RationalFunction.from_polys(Poly.of(Fraction(1, 2)), Poly.of(Fraction(1, 3), 1))
    assert r.numer == (3,)
    assert r.denom == (6, 2)


def test_addition_and_subtraction():
    total = 1 / C + 1 / (1 - C)
    assert total == RationalFunction.from_polys(Poly.of(1), Poly.of(0, 1, -1))
    assert total.denom == (1, -1, 0)
    assert (C - C).is_zero
    assert (C / C).is_one
    assert total - 1 / C == 1 / (1 - C)


def test_multiplication_and_powers():
    r = (C + 1) / (C - 1)
    assert r * ((C - 1) / (C + 1)) == RationalFunction.one()
    assert r**2 * r**-2 == RationalFunction.one()
    assert (C * 2) * Fraction(1, 2) == C


def test_constants_stay_constant():
    half = RationalFunction.constant(Fraction(1, 2))
    assert half.is_constant
    assert (half + half).is_one
    assert (half * 4).constant_value() == 2
    assert C.constant_value() is None


def test_var_name_does_not_affect_equality():
    assert C.with_var("z") == C
    assert C.with_var("z").render() == "z"


def test_poles():
    with pytest.raises(PoleError):
        RationalFunction.zero().reciprocal()
    with pytest.raises(PoleError):
        (1 / C).evaluate(Fraction(0))
    with pytest.raises(PoleError):
        RationalFunction.from_polys(Poly.of(1), Poly())


def test_evaluate_exact_and_double():
    r = 1 / (C * C * 2 - C * 2 + 1) / 2
    assert r.evaluate(Fraction(1, 2)) == 1
    assert r.evaluate(0.7) == pytest.approx(0.8620689655172413)


def test_text_forms():
    r = RationalFunction.from_polys(Poly.of(-1, 0, 12, -24, 12), Poly.of(1, -2, 2))
    assert r.to_text() == ("-1 0 12 -24 12", "1 -2 2")
    assert RationalFunction.from_text(*r.to_text()) == r
    assert RationalFunction.zero().to_text() == ("0", "1")
    with pytest.raises(ValueError):
        RationalFunction.from_text("1 x", "1")


def test_render_and_tex():
    r = 1 / (C * C * 4 - C * 4 + 2)
    assert r.render() == "(1)/(4*c^2 - 4*c + 2)"
    assert r.to_tex() == "\\frac{1}{4c^{2}-4c+2}"
    assert (-1 / (C + 1)).to_tex() == "-\\frac{1}{c+1}"
    assert (C * C - 1).render() == "c^2 - 1"


def test_assert_canonical_catches_common_content():
    with pytest.raises(InternalConsistencyError):
        RationalFunction((2,), (2,)).assert_canonical()
    (C / (C + 1)).assert_canonical()


def test_float_operand_is_rejected():
    with pytest.raises(TypeError):
        RationalFunction.one() + 0.5


def test_debug_switch_checks_every_result(monkeypatch):
    monkeypatch.setattr(settings, "CHECK_CANONICAL", True)
    r = (C * C - 1) / (C * 2 - 2) + 1 / (C + 3)
    assert r == (C * C + C * 4 + 5) / (C * 2 + 6)
    assert (r - r).is_zero
    with pytest.raises(InternalConsistencyError):
        RationalFunction((2,), (2,))


def test_debug_switch_is_off_by_default():
    assert RationalFunction((2,), (2,)).numer == (2,)

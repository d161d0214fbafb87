"""Test the invariance of a_n(c) under c -> 1 - c and the b_n(z) forms.

Module Information:
    - Filename: test_symmetry.py
    - Module: test_symmetry
    - Location: tests/
"""

from fractions import Fraction
import random

import pytest

from equichordal_lab.algebra import Poly, RationalFunction
from equichordal_lab.errors import UsageError
from equichordal_lab.published import PUBLISHED_B, matches_published
from equichordal_lab.series_solver import CoefficientTable
from equichordal_lab.symmetry import OddPartWitness, check_invariance, reflect_c, to_b

C = RationalFunction.variable()
Z = RationalFunction.variable("z")


def test_every_even_coefficient_is_invariant(symbolic_table):
    report = check_invariance(symbolic_table)
    assert [e.n for e in report.entries] == [2, 4, 6, 8, 10]
    assert report.all_invariant
    assert all(e.witness is None and e.b_n is not None for e in report.entries)


def test_printed_a_and_b_are_reproduced(symbolic_table):
    report = check_invariance(symbolic_table)
    for n in (2, 4, 6):
        assert report.entry(n).matches_published_a is True
        assert report.entry(n).matches_published_b is True
        assert report.entry(n).b_n == PUBLISHED_B[n]
    assert report.entry(8).matches_published_a is None
    with pytest.raises(KeyError):
        report.entry(12)


def test_b2_is_one_over_one_plus_z(symbolic_table):
    assert to_b(symbolic_table.coefficient(2)) == 1 / (1 + Z)


def test_non_invariant_function_yields_a_witness():
    result = to_b(C)
    assert isinstance(result, OddPartWitness)
    assert result.odd == RationalFunction.constant(Fraction(1, 2))
    assert result.render().startswith("w*(")


def test_reflect_c():
    assert reflect_c(1 / C) == 1 / (1 - C)
    assert reflect_c(reflect_c(C * C + 1 / (C + 2))) == C * C + 1 / (C + 2)


def test_fixed_tables_are_rejected():
    with pytest.raises(UsageError):
        check_invariance(CoefficientTable.empty(4, Fraction(7, 10)))


def test_matches_published_cross_multiplies():
    assert matches_published("b", 2, 2 / (2 + Z * 2)) is True
    assert matches_published("b", 2, 1 / (2 + Z)) is False
    assert matches_published("a", 10, C) is None


@pytest.mark.parametrize("seed", range(8))
def test_reflect_c_is_an_involution_on_random_inputs(seed):
    rng = random.Random(seed)
    num = Poly.of(*[rng.randint(-6, 6) for _ in range(rng.randint(1, 5))])
    den = Poly.of(*[rng.randint(-6, 6) for _ in range(rng.randint(0, 4))], rng.choice([-2, 1, 3]))
    r = RationalFunction.from_polys(num, den)
    assert reflect_c(reflect_c(r)) == r
    symmetric = r * reflect_c(r)
    assert reflect_c(symmetric) == symmetric
    assert isinstance(to_b(symmetric), RationalFunction)

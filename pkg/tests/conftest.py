"""Shared fixtures for the test suite.

Module Information:
    - Filename: conftest.py
    - Module: conftest
    - Location: tests/

The symbolic table through order 10 is the expensive object most modules
need, so it is solved once per session.
"""

from fractions import Fraction

import pytest

from equichordal_lab.series_solver import solve_coefficients
from equichordal_lab.utils_logger import init_logger


@pytest.fixture(scope="session", autouse=True)
def _logging():
    init_logger("INFO")


@pytest.fixture(scope="session")
def symbolic_table():
    """Symbolic a_0 .. a_10 over Q(c)."""
    return solve_coefficients(10)


@pytest.fixture(scope="session")
def table_at_seven_tenths():
    """Fixed-mode a_0 .. a_10 at c = 7/10."""
    return solve_coefficients(10, Fraction(7, 10))

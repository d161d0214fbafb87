"""Test the CSV coefficient cache.

Module Information:
    - Filename: test_coefficient_cache.py
    - Module: test_coefficient_cache
    - Location: tests/
"""

from fractions import Fraction

import pandas as pd

from equichordal_lab.coefficient_cache import (
    CACHE_COLUMNS,
    load_table,
    solve_coefficients_cached,
    store_table,
)
from equichordal_lab.series_solver import solve_coefficients


def test_cached_equals_cold(tmp_path):
    path = tmp_path / "cache.csv"
    c = Fraction(7, 10)
    first = solve_coefficients_cached(6, c, path)
    assert path.exists()
    assert list(pd.read_csv(path, dtype=str).columns) == CACHE_COLUMNS
    assert load_table(6, c, path) == first
    assert solve_coefficients_cached(6, c, path) == solve_coefficients(6, c)


def test_shorter_request_is_served_from_a_longer_entry(tmp_path, symbolic_table):
    path = tmp_path / "cache.csv"
    store_table(symbolic_table, path)
    assert load_table(6, None, path) == symbolic_table.truncated(6)
    assert load_table(12, None, path) is None


def test_modes_are_kept_apart(tmp_path, symbolic_table, table_at_seven_tenths):
    path = tmp_path / "cache.csv"
    store_table(symbolic_table, path)
    store_table(table_at_seven_tenths, path)
    assert load_table(10, None, path) == symbolic_table
    assert load_table(10, Fraction(7, 10), path) == table_at_seven_tenths
    assert load_table(4, Fraction(1, 3), path) is None


def test_stale_version_is_ignored(tmp_path, table_at_seven_tenths):
    path = tmp_path / "cache.csv"
    store_table(table_at_seven_tenths, path)
    df = pd.read_csv(path, dtype=str, keep_default_na=False)
    df["solver_version"] = "0"
    df.to_csv(path, index=False)
    assert load_table(4, Fraction(7, 10), path) is None


def test_foreign_file_is_an_empty_cache(tmp_path):
    path = tmp_path / "cache.csv"
    path.write_text("not,a,cache\n1,2,3\n")
    assert load_table(2, None, path) is None
    assert load_table(2, None, tmp_path / "missing.csv") is None


def test_no_cache_path_solves_directly():
    assert solve_coefficients_cached(4, Fraction(1, 3), None) == solve_coefficients(4, Fraction(1, 3))

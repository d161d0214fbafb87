"""CSV cache of solved coefficient tables.

One row per (c_mode, n) with the canonical numerator and denominator as decimal
coefficient lists (lowest degree first) and the solver version that produced them.

Module Information:
    - Filename: coefficient_cache.py
    - Module: coefficient_cache
    - Location: src/equichordal_lab/

Key Concepts:
    - Rows written by another solver version are ignored and overwritten
    - A request is served from the cache only if every order 0..N is present
    - Cached and cold results are identical; the cache never changes an answer
"""

from __future__ import annotations

from fractions import Fraction
import pathlib

import pandas as pd

from .algebra import RationalFunction
from .series_solver import SOLVER_VERSION, CoefficientTable, solve_coefficients
from .settings import DEFAULT_CACHE_PATH
from .utils_logger import logger

CACHE_COLUMNS: list[str] = ["n", "c_mode", "numerator", "denominator", "solver_version"]


def _c_mode(c: Fraction | None) -> str:
    return "symbolic" if c is None else f"fixed:{Fraction(c)}"


def read_cache(path: pathlib.Path) -> pd.DataFrame:
    """Read the cache file; a missing or unreadable file is an empty cache."""
    if not path.exists():
        return pd.DataFrame(columns=CACHE_COLUMNS)
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False)
    except (OSError, ValueError, pd.errors.ParserError) as exc:
        logger.warning(f"Ignoring unreadable coefficient cache {path}: {exc}")
        return pd.DataFrame(columns=CACHE_COLUMNS)
    if list(df.columns) != CACHE_COLUMNS:
        logger.warning(f"Ignoring coefficient cache {path} with columns {list(df.columns)}")
        return pd.DataFrame(columns=CACHE_COLUMNS)
    return df


def load_table(
    order: int, c: Fraction | None, path: pathlib.Path = DEFAULT_CACHE_PATH
) -> CoefficientTable | None:
    """Cached table through ``order`` for this mode, or None on a miss."""
    df = read_cache(path)
    mode = _c_mode(c)
    rows = df[(df["c_mode"] == mode) & (df["solver_version"] == SOLVER_VERSION)]
    stale = df[(df["c_mode"] == mode) & (df["solver_version"] != SOLVER_VERSION)]
    if not stale.empty:
        logger.warning(f"{len(stale)} cached rows for {mode} carry an old solver version")
    by_order = {int(row.n): row for row in rows.itertuples(index=False)}
    if any(n not in by_order for n in range(order + 1)):
        return None
    coeffs = tuple(
        RationalFunction.from_text(by_order[n].numerator, by_order[n].denominator)
        for n in range(order + 1)
    )
    logger.info(f"Coefficient cache hit: {mode} through order {order} from {path}")
    return CoefficientTable(None if c is None else Fraction(c), order, coeffs)


def store_table(table: CoefficientTable, path: pathlib.Path = DEFAULT_CACHE_PATH) -> None:
    """Write the table's rows, replacing every row of the same mode."""
    df = read_cache(path)
    keep = df[df["c_mode"] != table.c_mode]
    records = []
    for n, value in enumerate(table.a):
        numerator, denominator = value.to_text()
        records.append(
            {
                "n": str(n),
                "c_mode": table.c_mode,
                "numerator": numerator,
                "denominator": denominator,
                "solver_version": SOLVER_VERSION,
            }
        )
    out = pd.concat([keep, pd.DataFrame(records, columns=CACHE_COLUMNS)], ignore_index=True)
    path.parent.mkdir(parents=True, exist_ok=True)
    out.to_csv(path, index=False)
    logger.info(f"Cached {len(records)} coefficients for {table.c_mode} in {path}")


def solve_coefficients_cached(
    order: int, c: Fraction | None = None, cache_path: pathlib.Path | None = DEFAULT_CACHE_PATH
) -> CoefficientTable:
    """solve_coefficients, served from and written to the cache when a path is given."""
    if cache_path is None:
        return solve_coefficients(order, c)
    cached = load_table(order, c, cache_path)
    if cached is not None:
        return cached
    table = solve_coefficients(order, c)
    store_table(table, cache_path)
    return table


__all__ = [
    "CACHE_COLUMNS",
    "load_table",
    "read_cache",
    "solve_coefficients_cached",
    "store_table",
]

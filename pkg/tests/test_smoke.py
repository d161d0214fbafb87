"""Test that the package imports and its entry point is wired.

Module Information:
    - Filename: test_smoke.py
    - Module: test_smoke
    - Location: tests/
"""

import equichordal_lab
from equichordal_lab import (
    algebra,
    cli,
    coefficient_cache,
    crosscheck,
    dynamics,
    emitters,
    published,
    refutation,
    series_solver,
    symmetry,
    utils_logger,
)


def test_imports_work():
    """Verify all modules can be imported."""
    for module in (
        algebra, cli, coefficient_cache, crosscheck, dynamics, emitters,
        published, refutation, series_solver, symmetry, utils_logger,
    ):
        assert module is not None
    assert equichordal_lab.__version__


def test_help_exits_cleanly(capsys):
    assert cli.run(["--help"]) == 0
    assert "equichordal-lab" in capsys.readouterr().out

"""Project paths and numeric defaults.

Module Information:
    - Filename: settings.py
    - Module: settings
    - Location: src/equichordal_lab/

Directories are only created when something is written into them.
"""

import os
import pathlib

from .utils_logger import project_root

# ==== Paths ====
DATA_DIR: pathlib.Path = project_root / "data"
CACHE_DIR: pathlib.Path = DATA_DIR / "cache"
DEFAULT_CACHE_PATH: pathlib.Path = CACHE_DIR / "coefficients.csv"

# ==== Dynamics tolerances ====
DEFAULT_TOL: float = 1e-13
DEFAULT_MAX_ITER: int = 10**6
FINITE_DIFFERENCE_STEP: float = 1e-6
JACOBIAN_OFF_DIAGONAL_TOL: float = 1e-6
JACOBIAN_RELATIVE_TOL: float = 1e-5
INVERSE_LAW_TOLERANCE: float = 1e-11
MAX_BISECTION_STEPS: int = 200
IMAGE_DEFECT_TOL: float = 1e-10

# ==== Cross-check ====
CROSSCHECK_K_BOUND: float = 1e3

# ==== Exact algebra ====
# Debug switch: re-verify canonical form after every rational-function operation.
CHECK_CANONICAL: bool = os.environ.get("EQUICHORDAL_CHECK_CANONICAL", "") == "1"

__all__ = [
    "CACHE_DIR",
    "CHECK_CANONICAL",
    "CROSSCHECK_K_BOUND",
    "DATA_DIR",
    "DEFAULT_CACHE_PATH",
    "DEFAULT_MAX_ITER",
    "DEFAULT_TOL",
    "FINITE_DIFFERENCE_STEP",
    "INVERSE_LAW_TOLERANCE",
    "JACOBIAN_OFF_DIAGONAL_TOL",
    "JACOBIAN_RELATIVE_TOL",
    "IMAGE_DEFECT_TOL",
    "MAX_BISECTION_STEPS",
]

"""The chord-following planar map G_c and its local linearization.

Frame: B at the origin, A at (0, 1), S at (0, c), O at (0, 1/2), R at (0, 1 - c).
From Q walk a unit distance through S to P; reflect P through O to get Q1 = G_c(Q).

Module Information:
    - Filename: planar_map.py
    - Module: dynamics.planar_map
    - Location: src/equichordal_lab/dynamics/

Key Concepts:
    - Domain U_c: the open unit disk about S with S removed
    - G_{1-c} inverts G_c; H_c picks the branch contracting toward the axis
    - On the axis G_c(0, y) = (0, -y) and the derivative is diag(1/(c - y) - 1, -1)
    - eta is evaluated without cancellation: 1 - u/R = x^2 / (R (R + u)) when u > 0
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from ..errors import (
    AxisRangeError,
    InternalConsistencyError,
    MapDomainError,
    OutsideDiskError,
    ParameterError,
    PunctureError,
    SingularityError,
)
from ..settings import (
    FINITE_DIFFERENCE_STEP,
    JACOBIAN_OFF_DIAGONAL_TOL,
    JACOBIAN_RELATIVE_TOL,
)
from ..utils_logger import logger


@dataclass(frozen=True)
class PlanePoint:
    """Point in the B-centered frame."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise MapDomainError(f"Non-finite point ({self.x}, {self.y})")

    def distance_to(self, other: PlanePoint) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class MapParams:
    """The distance c = |BS|."""

    c: float

    def __post_init__(self) -> None:
        if not 0.0 < self.c < 1.0:
            raise ParameterError(f"c must lie in (0, 1), got {self.c}")

    @property
    def reflected(self) -> MapParams:
        """Parameters of the inverse map, 1 - c."""
        return MapParams(1.0 - self.c)

    @property
    def axis_bound(self) -> float:
        """min(c, 1 - c) in double precision; use on_axis_segment for membership."""
        return min(self.c, 1.0 - self.c)

    def on_axis_segment(self, y: float) -> bool:
        """|y| < min(c, 1 - c), decided without rounding 1 - c."""
        return abs(y) < self.c and abs(y) + self.c < 1.0

    @property
    def axis_ceiling(self) -> float:
        """Largest double y with (0, y) on the axis segment."""
        y = self.axis_bound
        while not self.on_axis_segment(y):
            y = math.nextafter(y, 0.0)
        return y

    def require_hyperbolic(self) -> None:
        if self.c == 0.5:
            raise ParameterError("c = 1/2 is not hyperbolic (mu = 1); this operation needs c != 1/2")


# ---------------------------------------------------------------------
# THE MAP
# ---------------------------------------------------------------------


def g_domain_contains(q: PlanePoint, p: MapParams) -> bool:
    """0 < x^2 + (y - c)^2 < 1."""
    d2 = q.x * q.x + (q.y - p.c) ** 2
    return 0.0 < d2 < 1.0


def _require_domain(q: PlanePoint, p: MapParams) -> None:
    d2 = q.x * q.x + (q.y - p.c) ** 2
    if d2 == 0.0:
        raise PunctureError(f"({q.x}, {q.y}) is the puncture S of U_{p.c}")
    if not d2 < 1.0:
        raise OutsideDiskError(f"({q.x}, {q.y}) is at distance {math.sqrt(d2)} >= 1 from S")


def g_map(q: PlanePoint, p: MapParams) -> PlanePoint:
    """G_c(x, y) = (xi, eta).

    Raises:
        PunctureError: q = S.
        OutsideDiskError: |q - S| >= 1.
    """
    _require_domain(q, p)
    u = p.c - q.y
    radius = math.hypot(q.x, u)
    xi = q.x / radius - q.x
    if u > 0.0:
        eta = q.x * q.x / (radius * (radius + u)) - q.y
    else:
        eta = 1.0 - u / radius - q.y
    return PlanePoint(xi, eta)


def g_map_by_walks(q: PlanePoint, p: MapParams) -> PlanePoint:
    """G_c by the two walks: Q -> P through S at unit distance, then P -> Q1 through O."""
    _require_domain(q, p)
    dx, dy = -q.x, p.c - q.y
    step = math.hypot(dx, dy)
    px, py = q.x + dx / step, q.y + dy / step
    return PlanePoint(-px, 1.0 - py)


def h_map(q: PlanePoint, p: MapParams) -> PlanePoint:
    """G_c for c > 1/2, G_c^{-1} = G_{1-c} for c < 1/2."""
    p.require_hyperbolic()
    return g_map(q, p) if p.c > 0.5 else g_map(q, p.reflected)


def inverse_witness(q: PlanePoint, p: MapParams) -> tuple[float, float]:
    """Geometric facts behind G_{1-c} o G_c = id.

    With P1 the reflection of Q through O and Q1 = G_c(Q), the points P1, R, Q1
    are collinear and |P1 Q1| = 1.

    Returns:
        (collinearity determinant, |P1 Q1|), ideally (0, 1).
    """
    q1 = g_map(q, p)
    p1x, p1y = -q.x, 1.0 - q.y
    rx, ry = 0.0, 1.0 - p.c
    det = (rx - p1x) * (q1.y - p1y) - (ry - p1y) * (q1.x - p1x)
    return det, math.hypot(q1.x - p1x, q1.y - p1y)


def is_period_two(y: float, p: MapParams, tol: float = 1e-15) -> bool:
    """(0, y) returns to itself after two applications of G_c."""
    start = PlanePoint(0.0, y)
    back = g_map(g_map(start, p), p)
    return back.distance_to(start) <= tol


# ---------------------------------------------------------------------
# VECTORIZED MAP AND THE INVERSE LAW
# ---------------------------------------------------------------------


def g_map_array(xs: np.ndarray, ys: np.ndarray, c: float) -> tuple[np.ndarray, np.ndarray]:
    """G_c on arrays of in-domain points (no domain checks)."""
    u = c - ys
    radius = np.hypot(xs, u)
    xi = xs / radius - xs
    with np.errstate(divide="ignore", invalid="ignore"):
        eta = np.where(u > 0.0, xs * xs / (radius * (radius + u)) - ys, 1.0 - u / radius - ys)
    return xi, eta


def inverse_law_defect(
    c: float,
    samples: int = 10_000,
    seed: int = 0,
    *,
    r_min: float = 0.05,
    r_max: float = 0.95,
) -> float:
    """Max over sampled points of ||G_{1-c}(G_c(q)) - q||_inf.

    Points are drawn with distance to S in [r_min, r_max] and uniform angle.
    """
    params = MapParams(c)
    rng = np.random.default_rng(seed)
    radius = rng.uniform(r_min, r_max, samples)
    angle = rng.uniform(0.0, 2.0 * np.pi, samples)
    xs = radius * np.cos(angle)
    ys = params.c + radius * np.sin(angle)
    xi, eta = g_map_array(xs, ys, params.c)
    back_x, back_y = g_map_array(xi, eta, 1.0 - params.c)
    defect = float(np.max(np.maximum(np.abs(back_x - xs), np.abs(back_y - ys))))
    logger.debug(f"Inverse law at c = {c}: max defect {defect:.3e} over {samples} points")
    return defect


# ---------------------------------------------------------------------
# DERIVATIVES ON THE AXIS
# ---------------------------------------------------------------------


def finite_difference_jacobian(
    q: PlanePoint, p: MapParams, step: float = FINITE_DIFFERENCE_STEP
) -> np.ndarray:
    """Central-difference Jacobian of G_c at q (rows xi, eta; columns x, y)."""
    jac = np.empty((2, 2))
    for col, (hx, hy) in enumerate(((step, 0.0), (0.0, step))):
        plus = g_map(PlanePoint(q.x + hx, q.y + hy), p)
        minus = g_map(PlanePoint(q.x - hx, q.y - hy), p)
        jac[0, col] = (plus.x - minus.x) / (2.0 * step)
        jac[1, col] = (plus.y - minus.y) / (2.0 * step)
    return jac


def extended_jacobian(y: float, c: float, step: float = FINITE_DIFFERENCE_STEP) -> np.ndarray:
    """Central-difference derivative of (x, y, c) -> (G_c(x, y), c) at (0, y, c)."""

    def lifted(x: float, y_: float, c_: float) -> np.ndarray:
        image = g_map(PlanePoint(x, y_), MapParams(c_))
        return np.array([image.x, image.y, c_])

    base = np.array([0.0, y, c])
    jac = np.empty((3, 3))
    for col in range(3):
        shift = np.zeros(3)
        shift[col] = step
        jac[:, col] = (lifted(*(base + shift)) - lifted(*(base - shift))) / (2.0 * step)
    return jac


def _require_axis(y: float, p: MapParams) -> None:
    if not p.on_axis_segment(y):
        raise AxisRangeError(f"|y| = {abs(y)} must be below min(c, 1 - c) = {p.axis_bound:.15g}")


def frechet_at_axis(y: float, p: MapParams) -> tuple[float, float]:
    """Eigenvalues (lambda1, lambda2) of DG_c at (0, y), checked against finite differences."""
    _require_axis(y, p)
    lambda1 = 1.0 / (p.c - y) - 1.0
    lambda2 = -1.0
    jac = finite_difference_jacobian(PlanePoint(0.0, y), p)
    off_diagonal = max(abs(jac[0, 1]), abs(jac[1, 0]))
    if off_diagonal >= JACOBIAN_OFF_DIAGONAL_TOL:
        raise InternalConsistencyError(f"Jacobian at (0, {y}) is not diagonal: {jac.tolist()}")
    for got, expected in ((jac[0, 0], lambda1), (jac[1, 1], lambda2)):
        if not math.isclose(got, expected, rel_tol=JACOBIAN_RELATIVE_TOL, abs_tol=1e-9):
            raise InternalConsistencyError(
                f"Finite-difference eigenvalue {got} differs from {expected} at (0, {y}), c = {p.c}"
            )
    return lambda1, lambda2


def multiplier(y: float, p: MapParams) -> float:
    """mu = ((1 - c)^2 - y^2) / (c^2 - y^2), the two-step normal factor at (0, y)."""
    den = p.c * p.c - y * y
    if abs(den) < 1e-15:
        raise SingularityError(f"Multiplier undefined at y = {y}, c = {p.c} (c^2 = y^2)")
    return ((1.0 - p.c) ** 2 - y * y) / den


__all__ = [
    "MapParams",
    "PlanePoint",
    "extended_jacobian",
    "finite_difference_jacobian",
    "frechet_at_axis",
    "g_domain_contains",
    "g_map",
    "g_map_array",
    "g_map_by_walks",
    "h_map",
    "inverse_law_defect",
    "inverse_witness",
    "is_period_two",
    "multiplier",
]

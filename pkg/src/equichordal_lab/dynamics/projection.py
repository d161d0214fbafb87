"""Projection onto the axis along the invariant family, and the fibers themselves.

Near the axis H_c alternates a point between the fibers over y0 and -y0 while the
x-component shrinks by mu(y0) every two steps, so the projection is read off the
even iterates.

Module Information:
    - Filename: projection.py
    - Module: dynamics.projection
    - Location: src/equichordal_lab/dynamics/

Key Concepts:
    - Trust region |x| <= min(c, 1 - c) / 4, halved when a trace sample diverges
    - Fiber points by bisection on the starting height, with a monotonicity check per step
    - Each traced sample is mapped once more and must project onto the opposite fiber
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
import math

from ..errors import AxisRangeError, FiberSearchError, MapDomainError
from ..settings import DEFAULT_MAX_ITER, DEFAULT_TOL, MAX_BISECTION_STEPS
from ..utils_logger import logger
from .planar_map import MapParams, PlanePoint, h_map, multiplier


@dataclass(frozen=True)
class ConvergenceDiagnostics:
    """Outcome of iterating H_c from one starting point.

    Attributes:
        iterates: Trail of iterates, starting point first (may be abbreviated).
        limit: Estimated projection (0, y0).
        empirical_ratio: Last observed x_{k+2} / x_k over even k.
        predicted_mu: mu(y0) for the branch that H_c uses: parameters c when
            c > 1/2, and 1 - c otherwise, since H_c is then G_{1-c}.
        converged: |x| fell below tol at an even step.
        status: ``converged``, ``diverged`` or ``inconclusive``.
        steps: Number of map applications.
    """

    iterates: tuple[PlanePoint, ...]
    limit: PlanePoint
    empirical_ratio: float
    predicted_mu: float
    converged: bool
    status: str
    steps: int


@dataclass(frozen=True)
class FiberSample:
    """A point (x, F(x, y0, c)) of the invariant curve over (0, y0).

    Attributes:
        x: Abscissa.
        y0: Fiber label.
        F_value: Height of the curve at x (nan when the search failed).
        residual: |pi limit - y0| achieved at F_value.
        image_defect: |pi(H_c(x, F)) + y0|, when checked.
        error: Message of a collected per-sample failure.
    """

    x: float
    y0: float
    F_value: float
    residual: float
    image_defect: float | None = None
    error: str | None = None


def default_trust_radius(p: MapParams) -> float:
    """min(c, 1 - c) / 4."""
    return p.axis_bound / 4.0


def _branch_params(p: MapParams) -> MapParams:
    return p if p.c > 0.5 else p.reflected


def project_pi(
    q: PlanePoint,
    p: MapParams,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    *,
    trust_radius: float | None = None,
    keep_iterates: bool = True,
) -> ConvergenceDiagnostics:
    """Iterate H_c until the x-component is below ``tol`` at an even step.

    An iterate with |x| above twice the trust radius, or |y| at the axis bound,
    ends the run as diverged; running out of iterations ends it as inconclusive.
    """
    p.require_hyperbolic()
    radius = trust_radius if trust_radius is not None else default_trust_radius(p)
    bound = p.axis_bound
    if not p.on_axis_segment(q.y) or abs(q.x) > radius:
        raise MapDomainError(
            f"Start ({q.x}, {q.y}) outside the trust region |x| <= {radius}, |y| < {bound:.15g}"
        )

    trail = [q]
    even_x = [q.x]
    point = q
    steps = 0
    status = "inconclusive"
    while True:
        if steps % 2 == 0 and abs(point.x) < tol:
            status = "converged"
            break
        if steps >= max_iter:
            break
        try:
            point = h_map(point, p)
        except MapDomainError:
            status = "diverged"
            break
        steps += 1
        if keep_iterates:
            trail.append(point)
        if abs(point.x) > 2.0 * radius or not p.on_axis_segment(point.y):
            status = "diverged"
            break
        if steps % 2 == 0:
            even_x.append(point.x)

    if not keep_iterates and trail[-1] is not point:
        trail.append(point)
    ratio = math.nan
    if len(even_x) >= 2 and even_x[-2] != 0.0:
        ratio = even_x[-1] / even_x[-2]
    limit = PlanePoint(0.0, point.y if steps % 2 == 0 else -point.y)
    predicted = multiplier(limit.y, _branch_params(p)) if p.on_axis_segment(limit.y) else math.nan
    if status != "converged":
        logger.debug(f"project_pi from ({q.x}, {q.y}) ended {status} after {steps} steps")
    return ConvergenceDiagnostics(
        iterates=tuple(trail),
        limit=limit,
        empirical_ratio=ratio,
        predicted_mu=predicted,
        converged=status == "converged",
        status=status,
        steps=steps,
    )


def fiber_point(
    x: float,
    y0: float,
    p: MapParams,
    tol: float = DEFAULT_TOL,
    *,
    trust_radius: float | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
) -> FiberSample:
    """Find F(x, y0, c) by bisection on the height y of the starting point (x, y).

    Raises:
        FiberSearchError: no sign change could be bracketed, the projection did not
            converge, or the bracket stopped being monotone.
    """
    p.require_hyperbolic()
    bound = p.axis_bound
    if not p.on_axis_segment(y0):
        raise AxisRangeError(f"|y0| = {abs(y0)} must be below min(c, 1 - c) = {bound:.15g}")
    radius = trust_radius if trust_radius is not None else default_trust_radius(p)
    if abs(x) > radius:
        raise MapDomainError(f"|x| = {abs(x)} exceeds the trust radius {radius}")
    if x == 0.0:
        return FiberSample(0.0, y0, y0, 0.0)

    def offset(y: float) -> float:
        diag = project_pi(
            PlanePoint(x, y), p, tol, max_iter, trust_radius=radius, keep_iterates=False
        )
        if not diag.converged:
            raise FiberSearchError(
                f"Projection from ({x}, {y}) {diag.status} after {diag.steps} steps",
                diverged=diag.status == "diverged",
            )
        return diag.limit.y - y0

    ceiling = p.axis_ceiling
    width = max(4.0 * x * x, 1e-12)
    while True:
        lo, hi = max(y0 - width, -ceiling), min(y0 + width, ceiling)
        g_lo, g_hi = offset(lo), offset(hi)
        if g_lo <= 0.0 <= g_hi:
            break
        if (lo <= -ceiling and g_lo > 0.0) or (hi >= ceiling and g_hi < 0.0):
            raise FiberSearchError(
                f"No sign change of pi(y) - y0 in [{lo}, {hi}] (values {g_lo}, {g_hi}) for x = {x}"
            )
        width *= 2.0

    for _ in range(MAX_BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        g_mid = offset(mid)
        slack = 256.0 * math.ulp(max(abs(lo), abs(hi), tol))
        if g_mid < g_lo - slack or g_mid > g_hi + slack:
            raise FiberSearchError(
                f"pi is not monotone on [{lo}, {hi}]: values {g_lo}, {g_mid}, {g_hi} (x = {x})"
            )
        if g_mid == 0.0:
            lo = hi = mid
            break
        if g_mid < 0.0:
            lo, g_lo = mid, g_mid
        else:
            hi, g_hi = mid, g_mid

    F = lo if abs(g_lo) <= abs(g_hi) else hi
    return FiberSample(x, y0, F, min(abs(g_lo), abs(g_hi)))


def trace_invariant_curve(
    p: MapParams,
    y0: float,
    xs: Sequence[float],
    tol: float = DEFAULT_TOL,
    *,
    max_iter: int = DEFAULT_MAX_ITER,
) -> list[FiberSample]:
    """Sample the curve over (0, y0) at each x, in input order.

    Each sample is also mapped by H_c and projected; the image must land on the
    fiber over -y0 (``image_defect``). Failures are recorded on the sample.
    """
    p.require_hyperbolic()
    if not p.on_axis_segment(y0):
        raise AxisRangeError(f"|y0| = {abs(y0)} must be below min(c, 1 - c) = {p.axis_bound:.15g}")
    radius = default_trust_radius(p)
    samples: list[FiberSample] = []
    for x in xs:
        if abs(x) > radius:
            samples.append(_failed(x, y0, f"|x| = {abs(x)} outside the trust radius {radius}"))
            continue
        try:
            sample = fiber_point(x, y0, p, tol, trust_radius=radius, max_iter=max_iter)
        except FiberSearchError as exc:
            if exc.diverged:
                radius /= 2.0
                logger.warning(f"Divergence at x = {x}; trust radius halved to {radius}")
            samples.append(_failed(x, y0, str(exc)))
            continue
        samples.append(_with_image_check(sample, p, tol, max_iter, radius))
    logger.info(
        f"Traced {len(samples)} samples of the curve over y0 = {y0} "
        f"({sum(s.error is not None for s in samples)} failed)"
    )
    return samples


def _failed(x: float, y0: float, message: str) -> FiberSample:
    return FiberSample(x, y0, math.nan, math.nan, error=message)


def _with_image_check(
    sample: FiberSample, p: MapParams, tol: float, max_iter: int, radius: float
) -> FiberSample:
    image = h_map(PlanePoint(sample.x, sample.F_value), p)
    try:
        diag = project_pi(
            image, p, tol, max_iter, trust_radius=max(radius, abs(image.x)), keep_iterates=False
        )
    except MapDomainError as exc:
        return FiberSample(sample.x, sample.y0, sample.F_value, sample.residual, error=str(exc))
    if not diag.converged:
        return FiberSample(
            sample.x, sample.y0, sample.F_value, sample.residual,
            error=f"image projection {diag.status}",
        )
    defect = abs(diag.limit.y + sample.y0)
    return FiberSample(sample.x, sample.y0, sample.F_value, sample.residual, image_defect=defect)


__all__ = [
    "ConvergenceDiagnostics",
    "FiberSample",
    "default_trust_radius",
    "fiber_point",
    "project_pi",
    "trace_invariant_curve",
]

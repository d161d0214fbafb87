"""Test the projection along the invariant family and the fiber search.

Module Information:
    - Filename: test_projection.py
    - Module: test_projection
    - Location: tests/
"""

from fractions import Fraction
import math

import pytest

from equichordal_lab.dynamics import (
    MapParams,
    PlanePoint,
    default_trust_radius,
    fiber_point,
    h_map,
    multiplier,
    project_pi,
    trace_invariant_curve,
)
from equichordal_lab.errors import AxisRangeError, MapDomainError, ParameterError
from equichordal_lab.series_solver import taylor_eval

P = MapParams(0.7)


def test_axis_points_project_to_themselves():
    diag = project_pi(PlanePoint(0.0, 0.1), P)
    assert diag.converged
    assert diag.steps == 0
    assert diag.limit == PlanePoint(0.0, 0.1)
    assert math.isnan(diag.empirical_ratio)


@pytest.mark.parametrize("y", [-0.05, 0.0, 0.05])
def test_contraction_rate_matches_the_multiplier(y):
    diag = project_pi(PlanePoint(0.05, y), P)
    assert diag.converged
    assert diag.status == "converged"
    assert diag.steps % 2 == 0
    assert len(diag.iterates) == diag.steps + 1
    assert diag.predicted_mu == pytest.approx(multiplier(diag.limit.y, P))
    assert diag.empirical_ratio == pytest.approx(diag.predicted_mu, rel=1e-2)


def test_small_c_uses_the_inverse_branch():
    diag = project_pi(PlanePoint(0.05, 0.0), MapParams(0.3))
    assert diag.converged
    assert diag.predicted_mu == pytest.approx(multiplier(diag.limit.y, MapParams(0.7)))
    assert diag.empirical_ratio == pytest.approx(diag.predicted_mu, rel=1e-2)


def test_iteration_cap_is_inconclusive():
    diag = project_pi(PlanePoint(0.05, 0.0), P, max_iter=3)
    assert diag.status == "inconclusive"
    assert not diag.converged
    assert diag.steps == 3


def test_start_must_be_in_the_trust_region():
    assert default_trust_radius(P) == pytest.approx(0.075)
    with pytest.raises(MapDomainError):
        project_pi(PlanePoint(0.1, 0.0), P)
    with pytest.raises(ParameterError):
        project_pi(PlanePoint(0.01, 0.0), MapParams(0.5))


def test_fiber_passes_through_its_axis_point():
    sample = fiber_point(0.0, 0.05, P)
    assert sample.F_value == 0.05
    assert sample.residual == 0.0


def test_fiber_over_origin_matches_the_taylor_sum(table_at_seven_tenths):
    sample = fiber_point(0.05, 0.0, P)
    assert sample.F_value == pytest.approx(
        taylor_eval(table_at_seven_tenths, Fraction(7, 10), 0.05), abs=1e-12
    )
    assert sample.residual < 1e-15


def test_fiber_is_tangent_to_the_axis():
    slopes = [abs(fiber_point(x, 0.0, P).F_value / x) for x in (1e-2, 1e-3, 1e-4)]
    assert slopes[0] > slopes[1] > slopes[2]
    assert slopes[2] < 1e-3


def test_fiber_arguments():
    with pytest.raises(AxisRangeError):
        fiber_point(0.01, 0.3, P)
    with pytest.raises(MapDomainError):
        fiber_point(0.2, 0.0, P)


def test_trace_over_origin_is_even():
    samples = trace_invariant_curve(P, 0.0, [-0.04, -0.02, 0.02, 0.04])
    assert all(s.error is None for s in samples)
    assert samples[0].F_value == pytest.approx(samples[3].F_value, rel=1e-12)
    assert samples[1].F_value == pytest.approx(samples[2].F_value, rel=1e-12)
    assert all(s.image_defect < 1e-12 for s in samples)


def test_trace_maps_onto_the_opposite_fiber():
    samples = trace_invariant_curve(P, 0.05, [0.02, 0.04])
    for s in samples:
        assert s.error is None
        assert s.image_defect < 1e-12
        assert s.F_value != s.y0


def test_trace_collects_failures():
    samples = trace_invariant_curve(P, 0.0, [0.02, 0.5])
    assert samples[0].error is None
    assert samples[1].error is not None
    assert math.isnan(samples[1].F_value)
    with pytest.raises(AxisRangeError):
        trace_invariant_curve(P, 0.3, [0.02])


@pytest.mark.parametrize("c", [0.3, 0.7])
def test_axis_point_on_the_boundary_is_rejected(c):
    p = MapParams(c)
    with pytest.raises(AxisRangeError):
        fiber_point(0.01, 0.3, p)
    with pytest.raises(AxisRangeError):
        fiber_point(0.01, -0.3, p)
    with pytest.raises(AxisRangeError):
        trace_invariant_curve(p, 0.3, [0.01])
    with pytest.raises(MapDomainError):
        project_pi(PlanePoint(0.01, 0.3), p)


@pytest.mark.parametrize("y0", [0.05, -0.05])
def test_image_of_a_fiber_point_lies_on_the_opposite_fiber(y0):
    sample = fiber_point(0.04, y0, P)
    image = h_map(PlanePoint(sample.x, sample.F_value), P)
    opposite = fiber_point(image.x, -y0, P)
    assert opposite.F_value == pytest.approx(image.y, abs=1e-12)


def test_traces_over_opposite_labels_are_linked_by_the_map():
    upper = trace_invariant_curve(P, 0.05, [0.02, 0.04])
    lower = trace_invariant_curve(P, -0.05, [0.02, 0.04])
    for s in upper + lower:
        assert s.error is None
        assert s.image_defect < 1e-12
    assert [s.F_value for s in upper] != [s.F_value for s in lower]

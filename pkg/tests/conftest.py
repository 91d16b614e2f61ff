import math

import numpy as np
import pytest

from apollonia import (
    CircleCoeffs,
    circle_from_center_radius,
    line_from_point_angle,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20260824)


def random_circle(rng, span=5.0, rmin=0.3, rmax=3.0) -> CircleCoeffs:
    cx, cy = rng.uniform(-span, span, 2)
    r = rng.uniform(rmin, rmax)
    return circle_from_center_radius(cx, cy, r, ccw=bool(rng.integers(2)))


def random_line(rng, span=5.0) -> CircleCoeffs:
    x, y = rng.uniform(-span, span, 2)
    return line_from_point_angle(x, y, rng.uniform(-math.pi, math.pi))


def random_triple(rng, **kw):
    return tuple(random_circle(rng, **kw) for _ in range(3))


def random_line_triple(rng):
    return tuple(random_line(rng) for _ in range(3))


def random_counter_tangent_triple(rng):
    """Three pairwise counter-tangent ccw circles (external tangency)."""
    r1, r2, r3 = rng.uniform(0.4, 2.5, 3)
    # centers form a triangle with side lengths r_i + r_j
    d12, d13, d23 = r1 + r2, r1 + r3, r2 + r3
    x3 = (d12 * d12 + d13 * d13 - d23 * d23) / (2.0 * d12)
    y3 = math.sqrt(max(d13 * d13 - x3 * x3, 0.0))
    return (circle_from_center_radius(0.0, 0.0, r1),
            circle_from_center_radius(d12, 0.0, r2),
            circle_from_center_radius(x3, y3, r3))


def orthogonal_triple():
    """Three pairwise orthogonal unit circles (equilateral centers)."""
    s = math.sqrt(2.0)
    return (circle_from_center_radius(0.0, 0.0, 1.0),
            circle_from_center_radius(s, 0.0, 1.0),
            circle_from_center_radius(s / 2.0, math.sqrt(6.0) / 2.0, 1.0))


SYMMETRIC_UNIT_TRIPLE = (
    circle_from_center_radius(0.0, 0.0, 1.0),
    circle_from_center_radius(3.0, 0.0, 1.0),
    circle_from_center_radius(0.0, 3.0, 1.0),
)

# y = 0 directed +x, x = 0 directed +y, x + y = 2 directed up-left
TRIANGLE_LINES = (
    line_from_point_angle(0.0, 0.0, 0.0),
    line_from_point_angle(0.0, 0.0, math.pi / 2.0),
    line_from_point_angle(2.0, 0.0, 3.0 * math.pi / 4.0),
)

# two nonnegative reversal products: exactly 4 non-oriented solutions
FOUR_SOLUTION_TRIPLE = (
    circle_from_center_radius(3.85, 1.48, 2.0),
    circle_from_center_radius(1.5, -0.9, 0.66),
    circle_from_center_radius(1.77, 0.2, 1.14),
)

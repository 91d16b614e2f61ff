import math

import pytest

from apollonia import (
    apply_frame,
    canonical_frame,
    canonical_q,
    circle_from_center_radius,
    circle_from_quadruple,
    conic_params,
    invert_in_circle,
    line_from_point_angle,
    pencil_member,
    q_value,
    reverse,
    tangent_family,
)
from apollonia.circle_core import CurvatureElement, circle_from_element
from apollonia.invariants import radical_axis
from apollonia.transforms import (
    ConicDegeneracy,
    CurvatureZeroFirst,
    FrameMap,
    PoleParameter,
    SingularParameter,
)

from conftest import random_circle, random_triple


def coeff_close(k1, k2, tol=1e-9):
    scale = max(1.0, *(abs(v) for v in k1.quadruple()))
    return max(abs(u - v) for u, v in zip(k1.quadruple(),
                                          k2.quadruple())) <= tol * scale


class TestInversion:
    def test_fixed_point(self):
        k = circle_from_center_radius(1.0, 2.0, 3.0)
        assert coeff_close(invert_in_circle(k, k), k, 1e-12)

    def test_orthogonal_mirror_reverses(self):
        k = circle_from_center_radius(0.0, 0.0, 1.0)
        mirror = circle_from_center_radius(math.sqrt(2.0), 0.0, 1.0)
        assert coeff_close(invert_in_circle(k, mirror), reverse(k), 1e-12)

    def test_line_in_unit_circle(self):
        line = circle_from_quadruple(0.0, 0.0, -1.0, 4.0)  # y = 2
        unit = circle_from_quadruple(1.0, 0.0, 0.0, -1.0)
        img = invert_in_circle(line, unit)
        assert img.quadruple() == pytest.approx((-4.0, 0.0, 1.0, 0.0))

    def test_involution(self, rng):
        for _ in range(100):
            k, mirror = random_circle(rng), random_circle(rng)
            assert coeff_close(invert_in_circle(invert_in_circle(k, mirror),
                                                mirror), k, 1e-10)

    def test_q_preserved_under_simultaneous_inversion(self, rng):
        for _ in range(100):
            k1, k2, mirror = random_triple(rng)
            q0 = q_value(k1, k2)
            q1 = q_value(invert_in_circle(k1, mirror),
                         invert_in_circle(k2, mirror))
            assert abs(q1 - q0) <= 1e-9 * max(1.0, abs(q0))


class TestPencilMember:
    def test_endpoints(self):
        k1 = circle_from_center_radius(0.0, 0.0, 1.0)
        k2 = circle_from_center_radius(0.5, 0.2, 2.0)
        assert coeff_close(pencil_member(k1, k2, 1.0), k1, 1e-12)
        assert coeff_close(pencil_member(k1, k2, -1.0), reverse(k1), 1e-12)

    def test_weight_constraint(self, rng):
        for _ in range(100):
            k1, k2 = random_circle(rng), random_circle(rng)
            t = rng.uniform(-4.0, 4.0)
            cos_psi = 1.0 - 2.0 * q_value(k1, k2)
            denom = t * t + 2.0 * t * cos_psi + 1.0
            if abs(denom) < 1e-6:
                continue
            w1 = 2.0 * (t + cos_psi) / denom
            w2 = (t * t - 1.0) / denom
            assert w1 * w1 + w2 * w2 + 2.0 * w1 * w2 * cos_psi == \
                pytest.approx(1.0, abs=1e-9)
            member = pencil_member(k1, k2, t)
            a, b, c, d = member.quadruple()
            assert b * b + c * c - a * d == pytest.approx(1.0, abs=1e-9)

    def test_coaxality(self, rng):
        count = 0
        while count < 50:
            k1, k2 = random_circle(rng), random_circle(rng)
            t = rng.uniform(-3.0, 3.0)
            cos_psi = 1.0 - 2.0 * q_value(k1, k2)
            if abs(t * t + 2.0 * t * cos_psi + 1.0) < 1e-3 or abs(t) < 1e-2:
                continue
            member = pencil_member(k1, k2, t)
            try:
                base = radical_axis(k1, k2)
                mixed = radical_axis(member, k1)
            except Exception:
                continue
            count += 1
            qb, qm = base.quadruple(), mixed.quadruple()
            res = min(max(abs(u - s * v) for u, v in zip(qb, qm))
                      for s in (1.0, -1.0))
            assert res <= 1e-8

    def test_singular_parameter(self):
        # counter-tangent pair: cos(Psi) = -1, denominator (t-1)^2 = 0 at t=1
        k1 = circle_from_center_radius(0.0, 0.0, 1.0)
        k2 = circle_from_center_radius(3.0, 0.0, 2.0)
        with pytest.raises(SingularParameter):
            pencil_member(k1, k2, 1.0)


class TestApplyFrame:
    def test_identity_frame(self, rng):
        frame = FrameMap(0.0, 0.0, 0.0)
        for _ in range(20):
            k = random_circle(rng)
            assert coeff_close(apply_frame(k, frame), k, 1e-12)

    def test_round_trip(self, rng):
        for _ in range(50):
            k = random_circle(rng)
            frame = FrameMap(*rng.uniform(-4, 4, 2),
                             rng.uniform(-math.pi, math.pi))
            assert coeff_close(
                apply_frame(apply_frame(k, frame), frame, inverse=True),
                k, 1e-12)

    def test_q_invariance(self, rng):
        for _ in range(50):
            k1, k2 = random_circle(rng), random_circle(rng)
            frame = FrameMap(*rng.uniform(-4, 4, 2),
                             rng.uniform(-math.pi, math.pi))
            q0 = q_value(k1, k2)
            q1 = q_value(apply_frame(k1, frame), apply_frame(k2, frame))
            assert abs(q1 - q0) <= 1e-10 * max(1.0, abs(q0))


class TestCanonicalFrame:
    def test_unit_pair_at_distance_three(self):
        k1 = circle_from_center_radius(0.0, 0.0, 1.0)
        k2 = circle_from_center_radius(3.0, 0.0, 1.0)
        cp = canonical_frame(k1, k2)
        assert cp.frame.rotation == pytest.approx(math.pi)
        assert cp.x2 == pytest.approx(-2.0)
        in_frame_k2 = apply_frame(k2, cp.frame)
        center = in_frame_k2.center()
        assert (center.x, center.y) == pytest.approx((-3.0, 0.0), abs=1e-12)

    def test_unequal_pair(self):
        k1 = circle_from_center_radius(0.0, 0.0, 1.0)
        k2 = circle_from_center_radius(3.0, 0.0, 0.5)
        cp = canonical_frame(k1, k2)
        assert cp.x2 == pytest.approx(-2.5)
        assert canonical_q(cp) == pytest.approx(35.0 / 8.0)
        assert q_value(k1, k2) == pytest.approx(35.0 / 8.0)

    def test_concentric_pair(self):
        k1 = circle_from_center_radius(1.0, -2.0, 1.0)
        k2 = circle_from_center_radius(1.0, -2.0, 3.0)
        cp = canonical_frame(k1, k2)
        assert cp.frame.rotation == 0.0
        assert canonical_q(cp) == pytest.approx(q_value(k1, k2), abs=1e-10)

    def test_role_swap(self):
        line = line_from_point_angle(0.0, 0.0, 0.0)
        k = circle_from_center_radius(0.0, 2.0, 1.0)
        cp = canonical_frame(line, k)
        assert cp.swapped
        assert cp.a1 == pytest.approx(1.0)
        with pytest.raises(CurvatureZeroFirst):
            canonical_frame(line, line_from_point_angle(0.0, 1.0, 0.5))

    def test_round_trip_reconstruction(self, rng):
        for _ in range(100):
            k1, k2 = random_circle(rng), random_circle(rng)
            cp = canonical_frame(k1, k2)
            rk1 = apply_frame(
                circle_from_element(CurvatureElement(0.0, -1.0 / cp.a1, 0.0,
                                                     cp.a1)),
                cp.frame, inverse=True)
            rk2 = apply_frame(
                circle_from_element(CurvatureElement(cp.x2, 0.0,
                                                     math.pi / 2.0, cp.a2)),
                cp.frame, inverse=True)
            assert coeff_close(rk1, k1, 1e-9)
            assert coeff_close(rk2, k2, 1e-9)

    def test_closed_form_q_fuzz(self, rng):
        for _ in range(100):
            k1, k2 = random_circle(rng), random_circle(rng)
            cp = canonical_frame(k1, k2)
            q = q_value(k1, k2)
            assert abs(canonical_q(cp) - q) <= 1e-10 * max(1.0, abs(q))


class TestTangentFamily:
    def test_defining_property_fuzz(self, rng):
        for _ in range(30):
            k1, k2 = random_circle(rng), random_circle(rng)
            for xi in rng.uniform(-math.pi, math.pi, 4):
                try:
                    k0 = tangent_family(k1, k2, xi)
                except PoleParameter:
                    continue
                assert abs(q_value(k0, k1)) <= 1e-9
                assert abs(q_value(k0, k2)) <= 1e-9

    def test_periodicity(self):
        k1 = circle_from_center_radius(0.0, 0.0, 1.0)
        k2 = circle_from_center_radius(3.0, 0.0, 0.5)
        for xi in (0.3, 1.7, -2.4):
            assert coeff_close(tangent_family(k1, k2, xi),
                               tangent_family(k1, k2, xi + 2.0 * math.pi),
                               1e-9)

    def test_equal_curvature_center_locus(self):
        # unit circles at distance 3: in-frame centers on X = -1.5
        k1 = circle_from_center_radius(0.0, 0.0, 1.0)
        k2 = circle_from_center_radius(3.0, 0.0, 1.0)
        cp = canonical_frame(k1, k2)
        for xi in (0.2, 0.9, 2.1, -1.3, -2.8):
            k0 = apply_frame(tangent_family(k1, k2, xi), cp.frame)
            assert k0.center().x == pytest.approx(-1.5, abs=1e-9)

    def test_tangent_pair_family(self):
        # internally tangent with matching orientation: Q = 0
        k1 = circle_from_center_radius(0.0, 0.0, 1.0)
        k2 = circle_from_center_radius(1.0, 0.0, 2.0)
        assert q_value(k1, k2) == pytest.approx(0.0, abs=1e-12)
        for l0 in (0.5, -0.7, 2.0, 4.0):
            k0 = tangent_family(k1, k2, l0)
            assert abs(q_value(k0, k1)) <= 1e-9
            assert abs(q_value(k0, k2)) <= 1e-9
        with pytest.raises(PoleParameter):
            tangent_family(k1, k2, 1.0)  # a1*l0 - 1 = 0

    def test_pole_of_intersecting_pair(self):
        # unit circles at distance 1: point-circle members at cos(xi) = -1/2
        k1 = circle_from_center_radius(0.0, 0.0, 1.0)
        k2 = circle_from_center_radius(1.0, 0.0, 1.0)
        with pytest.raises(PoleParameter):
            tangent_family(k1, k2, 2.0 * math.pi / 3.0)


class TestConicParams:
    def test_hyperbola_example(self):
        k1 = circle_from_center_radius(0.0, 0.0, 1.0)
        k2 = circle_from_center_radius(3.0, 0.0, 0.5)
        cn = conic_params(k1, k2)
        assert cn.degenerate is None
        assert cn.eccentricity_sq == pytest.approx(36.0)
        assert cn.focal_param_sq == pytest.approx(4.0 * (35.0 / 8.0) ** 2)

    def test_centers_satisfy_conic_equation(self):
        k1 = circle_from_center_radius(0.0, 0.0, 1.0)
        k2 = circle_from_center_radius(3.0, 0.0, 0.5)
        cn = conic_params(k1, k2)
        eps = math.sqrt(cn.eccentricity_sq)
        p = math.sqrt(cn.focal_param_sq)
        cp = canonical_frame(k1, k2)
        for xi in (0.15, 0.8, 1.9, -0.6, -2.3, 3.0):
            k0 = apply_frame(tangent_family(k1, k2, xi), cp.frame)
            c = k0.center()
            x, y = c.x, c.y
            res = min(abs(y * y + (1.0 - eps * eps) * x * x
                          - 2.0 * s * eps * p * x - p * p)
                      for s in (1.0, -1.0))
            assert res <= 1e-8 * max(1.0, x * x, y * y, p * p)

    def test_degenerate_tags(self):
        k1 = circle_from_center_radius(0.0, 0.0, 1.0)
        k2 = circle_from_center_radius(3.0, 0.0, 1.0)
        assert conic_params(k1, k2).degenerate is \
            ConicDegeneracy.EQUAL_CURVATURES
        k3 = circle_from_center_radius(1.0, 0.0, 2.0)
        assert conic_params(k1, k3).degenerate is ConicDegeneracy.Q1_ZERO

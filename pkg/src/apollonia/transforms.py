"""Inversions, pencil combinations, canonical two-circle frames, and the
family of circles tangent to two given ones with the conic locus of its
centers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .circle_core import (
    CircleCoeffs,
    canonical_angle,
    CurvatureElement,
    GeometryError,
    circle_from_element,
    element_nearest_origin,
    normalized_coeffs,
)
from .invariants import EPS_Q, EPS_ZERO, coeff_scale, q_value, zero_tol


class SingularParameter(GeometryError):
    """Pencil parameter at which the weight denominator vanishes."""


class CurvatureZeroFirst(GeometryError):
    """Canonical frame needs at least one circle of nonzero curvature."""


class PoleParameter(GeometryError):
    """Family parameter at which the member degenerates (zero radius limit)."""


@dataclass(frozen=True)
class FrameMap:
    """Rigid motion: translate the origin to origin_shift, then rotate
    axes by rotation (new abscissa along that direction)."""

    origin_x: float
    origin_y: float
    rotation: float


@dataclass(frozen=True)
class CanonicalPair:
    """In-frame canonical pair: K1 = {0, -1/a1, 0, a1}, K2 = {x2, 0, pi/2, a2}."""

    a1: float
    a2: float
    x2: float
    frame: FrameMap
    swapped: bool


class ConicDegeneracy(Enum):
    Q1_ZERO = "q1_zero"
    EQUAL_CURVATURES = "equal_curvatures"


@dataclass(frozen=True)
class ConicParams:
    eccentricity_sq: float
    focal_param_sq: float
    degenerate: Optional[ConicDegeneracy]


def invert_in_circle(k: CircleCoeffs, mirror: CircleCoeffs) -> CircleCoeffs:
    """Image of k under inversion in mirror: 2*(1 - 2*Q)*mirror - k."""
    f = 2.0 * (1.0 - 2.0 * q_value(k, mirror))
    return normalized_coeffs(f * mirror.a - k.a, f * mirror.b - k.b,
                             f * mirror.c - k.c, f * mirror.d - k.d)


def pencil_member(k1: CircleCoeffs, k2: CircleCoeffs, t: float) -> CircleCoeffs:
    """Member of the pencil spanned by k1, k2 at family parameter t.

    t = 1 gives k1, t = -1 its reverse; the weights satisfy
    w1^2 + w2^2 + 2*w1*w2*cos(Psi12) = 1 so the output is normalized.
    """
    cos_psi = 1.0 - 2.0 * q_value(k1, k2)
    denom = t * t + 2.0 * t * cos_psi + 1.0
    if abs(denom) <= EPS_ZERO * max(1.0, t * t, abs(cos_psi)):
        raise SingularParameter(f"pencil weight denominator vanishes at t={t}")
    w1 = 2.0 * (t + cos_psi) / denom
    w2 = (t * t - 1.0) / denom
    return normalized_coeffs(w1 * k1.a + w2 * k2.a, w1 * k1.b + w2 * k2.b,
                             w1 * k1.c + w2 * k2.c, w1 * k1.d + w2 * k2.d)


def apply_frame(k: CircleCoeffs, frame: FrameMap,
                inverse: bool = False) -> CircleCoeffs:
    """Map a curve through the rigid motion of a frame (or back).

    Implemented by transporting a generating curvature element, which
    keeps the quadruple normalized and every pairwise Q unchanged.
    """
    el, _ = element_nearest_origin(k)
    if inverse:
        cs, sn = math.cos(frame.rotation), math.sin(frame.rotation)
        x = el.x * cs - el.y * sn + frame.origin_x
        y = el.x * sn + el.y * cs + frame.origin_y
        tau = el.tau + frame.rotation
    else:
        dx, dy = el.x - frame.origin_x, el.y - frame.origin_y
        cs, sn = math.cos(-frame.rotation), math.sin(-frame.rotation)
        x = dx * cs - dy * sn
        y = dx * sn + dy * cs
        tau = el.tau - frame.rotation
    return circle_from_element(CurvatureElement(x, y, tau, k.a))


def canonical_frame(k1: CircleCoeffs, k2: CircleCoeffs) -> CanonicalPair:
    """Frame in which k1 is centered at the origin and k2 sits on the
    abscissa: K1 = {0, -1/a1, 0, a1}, K2 = {x2, 0, pi/2, a2}.

    If k1 is a line but k2 is not, the roles are swapped (recorded in
    the result).  Two lines are rejected.
    """
    swapped = False
    if k1.a == 0.0:
        if k2.a == 0.0:
            raise CurvatureZeroFirst("canonical frame needs a circle, got two lines")
        k1, k2 = k2, k1
        swapped = True

    a1, a2 = k1.a, k2.a
    f1, g1 = -k1.b / a1, -k1.c / a1
    el2, l2 = element_nearest_origin(k2)
    lam2 = el2.tau
    m1 = a2 * g1 - (a2 * l2 + 1.0) * math.cos(lam2)
    m2 = a2 * f1 + (a2 * l2 + 1.0) * math.sin(lam2)
    m0 = math.hypot(m1, m2)
    if m0 <= zero_tol(coeff_scale(k1, k2), 2):
        mu = 0.0  # concentric: the common-perpendicular direction is free
        m0 = 0.0
    else:
        mu = canonical_angle(math.atan2(m1, m2))
    s = (a2 * (f1 * f1 + g1 * g1 - l2 * l2)
         - 2.0 * (f1 * m2 + g1 * m1 + l2)) / (1.0 + m0)
    return CanonicalPair(a1=a1, a2=a2, x2=s,
                         frame=FrameMap(f1, g1, mu), swapped=swapped)


def canonical_q(cp: CanonicalPair) -> float:
    """Closed-form Q of the canonical pair from (a1, a2, x2)."""
    return ((cp.a1 * cp.x2 - 1.0) * (cp.a1 * cp.a2 * cp.x2 + cp.a2 - 2.0 * cp.a1)
            / (4.0 * cp.a1))


def tangent_family(k1: CircleCoeffs, k2: CircleCoeffs, xi: float) -> CircleCoeffs:
    """One member of the family of circles tangent to both k1 and k2.

    For non-tangent pairs, xi is the polar angle of the member's center
    around the focus at k1's center (in the canonical frame).  For a
    tangent pair the conic collapses and xi is reinterpreted as the
    signed center-line offset l0 of the member.
    """
    cp = canonical_frame(k1, k2)
    a1, a2, x2 = cp.a1, cp.a2, cp.x2
    q1 = canonical_q(cp)
    scale = coeff_scale(k1, k2)

    if abs(q1) <= zero_tol(scale, 2, EPS_Q):
        # tangent pair: family K0(l0) = {±l0, 0, ∓pi/2, -2*a1/(a1*l0 - 1)}
        l0 = xi
        if abs(a1 * l0 - 1.0) <= EPS_ZERO:
            raise PoleParameter(f"family parameter l0={l0} hits the tangency point")
        a0 = -2.0 * a1 / (a1 * l0 - 1.0)
        best = None
        for sgn in (1.0, -1.0):
            cand = circle_from_element(
                CurvatureElement(sgn * l0, 0.0, -sgn * math.pi / 2.0, a0))
            cand = apply_frame(cand, cp.frame, inverse=True)
            res = max(abs(q_value(cand, k1)), abs(q_value(cand, k2)))
            if best is None or res < best[0]:
                best = (res, cand)
        return best[1]

    p0 = a1 * (a2 * x2 - 1.0) * math.cos(xi) + (a1 - a2)
    p1 = p0 - 2.0 * a1 * q1
    if abs(p1) <= EPS_ZERO * max(1.0, abs(p0), abs(2.0 * a1 * q1)):
        # member curvature diverges (zero-radius limit); no line limit exists
        raise PoleParameter(f"family parameter xi={xi} is a pole of the family")
    a0 = a1 * p0 / p1
    b0 = -2.0 * a1 * q1 * math.cos(xi) / p1
    c0 = -2.0 * a1 * q1 * math.sin(xi) / p1
    d0 = (4.0 * a1 * q1 - p0) / (a1 * p1)
    member = normalized_coeffs(a0, b0, c0, d0, snap_line=True)
    return apply_frame(member, cp.frame, inverse=True)


def conic_params(k1: CircleCoeffs, k2: CircleCoeffs) -> ConicParams:
    """Eccentricity and focal parameter of the locus of centers of circles
    tangent to k1 and k2 (in the canonical frame, focus at k1's center)."""
    cp = canonical_frame(k1, k2)
    a1, a2, x2 = cp.a1, cp.a2, cp.x2
    q1 = canonical_q(cp)
    scale = coeff_scale(k1, k2)
    degenerate = None
    if abs(q1) <= zero_tol(scale, 2, EPS_Q):
        degenerate = ConicDegeneracy.Q1_ZERO
    elif abs(a2 - a1) <= zero_tol(scale, 1):
        degenerate = ConicDegeneracy.EQUAL_CURVATURES
    if degenerate is ConicDegeneracy.EQUAL_CURVATURES:
        ecc_sq = math.inf
        p_sq = math.inf
    else:
        da = a2 - a1
        ecc_sq = a1 * a1 * (a2 * x2 - 1.0) ** 2 / (da * da)
        p_sq = 4.0 * q1 * q1 / (da * da)
    return ConicParams(eccentricity_sq=ecc_sq, focal_param_sq=p_sq,
                       degenerate=degenerate)

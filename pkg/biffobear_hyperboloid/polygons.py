# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT
"""
`biffobear_hyperboloid.polygons`
================================================================================

Trigonometric laws of two right-angled polygons of H^2 with ideal vertices,
both as closed forms on scalar data and as constructions from hyperboloid
data.

* A quadrilateral with two ideal vertices x0 and x1 and one compact side of
  length l lying on the plane of y. With horoballs at the ideal vertices,
  a_i is the signed distance from the finite vertex v_i to its horoball, d
  the signed distance between the horoballs and theta_i the length of the
  horocyclic arc cut from the horoball at x_i. Then

      sinh(l / 2) = e^((d - a0 - a1) / 2)
      theta0 / e^a1 = theta1 / e^a0 = sinh(l) / (2 e^d)

* A pentagon with four right angles and one ideal vertex x. The side of
  length d opposite x joins the planes of y0 and y1, the legs l0 and l1 lie
  on those planes and theta is the horocyclic arc at x. Then

      cosh(l_i) = (e^a_i cosh(d) + e^a_(1-i)) / (e^a_i sinh(d))
      theta / sinh(d) = sinh(l0) / e^a1 = sinh(l1) / e^a0

The ``*_build`` functions measure everything geometrically; the scalar laws
are checked against those measurements by ``*_residuals``.
"""

import logging
from collections import namedtuple

import numpy as np

from biffobear_hyperboloid import errors, lorentz
from biffobear_hyperboloid.objects import (
    TOL_OBJ,
    HalfSpace,
    Horoball,
    HPoint,
    geodesic_eval,
    tangent_toward,
)
from biffobear_hyperboloid.pairings import (
    TOL_PARALLEL,
    PlaneRelation,
    dist_point_point,
    horocyclic_distance,
    plane_pair_relation,
    sdist_horosphere_horosphere,
    sdist_plane_horosphere,
)

logger = logging.getLogger(__name__)

# Relative disagreement allowed between the two forms of the pentagon arc law
_ARC_CONSISTENCY = 1e-6

QuadData = namedtuple(
    "QuadData",
    [
        "x0",
        "x1",
        "y",
        "ell",
        "a0",
        "a1",
        "d",
        "theta0",
        "theta1",
        "v0",
        "v1",
        "u0",
        "u0_prime",
        "u1",
        "u1_prime",
    ],
)
QuadData.__doc__ = "Quadrilateral with two ideal vertices, measured on H^2."

PentData = namedtuple(
    "PentData",
    [
        "x",
        "y0",
        "y1",
        "d",
        "ell0",
        "ell1",
        "a0",
        "a1",
        "theta",
        "w0",
        "w1",
        "v0",
        "v1",
        "u0",
        "u1",
    ],
)
PentData.__doc__ = "Pentagon with four right angles and one ideal vertex."


def _check_plane(*objects):
    for obj in objects:
        if obj.dim != 2:
            raise errors.DimensionMismatch(
                "Polygons live in H^2, got an object of H^%s" % obj.dim
            )


def _check_side(b, h, name, tol):
    pairing = lorentz.ldot(b.x, h.y)
    if pairing >= -tol * np.linalg.norm(b.x):
        raise errors.WrongSide(
            "Ideal vertex must lie inside the half-space, %s = %r" % (name, pairing)
        )


def _relative(a, b):
    return abs(a - b) / max(abs(a), abs(b), np.finfo(float).tiny)


def _spread(values):
    """Largest pairwise relative difference."""
    return max(_relative(a, b) for a in values for b in values)


def _right_angle(vertex, toward_a, toward_b):
    """Residual |u o w| of the two edge tangents leaving a vertex."""
    return abs(
        lorentz.ldot(tangent_toward(vertex, toward_a), tangent_toward(vertex, toward_b))
    )


def quad_build(x0, x1, y, *, tol=TOL_OBJ):
    """Measure the quadrilateral cut out by two horoballs and a half-space.

    The finite vertex v_i is the foot of x_i on the plane of y. The arc at x_i
    runs from u_i, on the edge through v_i, to u_i', on the edge joining the
    two ideal vertices.

    :param Horoball x0: horoball at the first ideal vertex.
    :param Horoball x1: horoball at the second ideal vertex.
    :param HalfSpace y: half-space whose plane carries the compact side.
    :return: QuadData
    """
    _check_plane(x0, x1, y)
    _check_side(x0, y, "x0 o y", tol)
    _check_side(x1, y, "x1 o y", tol)
    gap = sdist_horosphere_horosphere(x0, x1)
    near = [sdist_plane_horosphere(y, b, tol=tol) for b in (x0, x1)]
    a0, a1 = (item.distance.value for item in near)
    v0, v1 = (item.foot for item in near)
    u0, u1 = (geodesic_eval(item.witness, a) for item, a in zip(near, (a0, a1)))
    u0_prime, u1_prime = gap.feet
    data = QuadData(
        x0=x0,
        x1=x1,
        y=y,
        ell=dist_point_point(v0, v1),
        a0=a0,
        a1=a1,
        d=gap.distance.value,
        theta0=horocyclic_distance(x0, u0, u0_prime, tol=tol),
        theta1=horocyclic_distance(x1, u1, u1_prime, tol=tol),
        v0=v0,
        v1=v1,
        u0=u0,
        u0_prime=u0_prime,
        u1=u1,
        u1_prime=u1_prime,
    )
    logger.debug(
        "Quadrilateral: ell=%r a=(%r, %r) d=%r theta=(%r, %r)",
        data.ell,
        a0,
        a1,
        data.d,
        data.theta0,
        data.theta1,
    )
    return data


def quad_side(d, a0, a1):
    """float: Length of the compact side, ``2 arcsinh(e^((d - a0 - a1) / 2))``."""
    return float(2.0 * np.arcsinh(np.exp((d - a0 - a1) / 2.0)))


def quad_arcs(ell, d, a0, a1):
    """Horocyclic arcs ``(theta0, theta1)`` from the law of sines."""
    common = np.sinh(ell) / (2.0 * np.exp(d))
    return float(np.exp(a1) * common), float(np.exp(a0) * common)


def quad_arc_radical(x0, x1, y):
    """float: theta0 in closed form from the three pairings.

    ``sqrt(1 / (x0 o y)^2 - 2 (x1 o y) / ((x0 o x1)(x0 o y)))``. Swap x0
    and x1 for theta1.
    """
    p0 = lorentz.ldot(x0.x, y.y)
    p1 = lorentz.ldot(x1.x, y.y)
    q = lorentz.ldot(x0.x, x1.x)
    return float(np.sqrt(1.0 / p0**2 - 2.0 * p1 / (q * p0)))


def quad_residuals(data):
    """Residuals of the quadrilateral laws on measured data.

    :return: dict with ``side_law``, ``sine_law``, ``right_angle`` and
        ``arc_radical``.
    """
    expected = np.exp((data.d - data.a0 - data.a1) / 2.0)
    ratios = (
        data.theta0 / np.exp(data.a1),
        data.theta1 / np.exp(data.a0),
        np.sinh(data.ell) / (2.0 * np.exp(data.d)),
    )
    return {
        "side_law": float(abs(np.sinh(data.ell / 2.0) - expected) / max(1.0, expected)),
        "sine_law": float(_spread(ratios)),
        "right_angle": float(
            max(
                _right_angle(data.v0, data.x0, data.v1),
                _right_angle(data.v1, data.x1, data.v0),
            )
        ),
        "arc_radical": float(
            max(
                abs(data.theta0 - quad_arc_radical(data.x0, data.x1, data.y)),
                abs(data.theta1 - quad_arc_radical(data.x1, data.x0, data.y)),
            )
        ),
    }


def quad_from_scalars(a0, a1, d):
    """A canonical quadrilateral with the given a0, a1 and d.

    The plane is ``y = (0, 0, 1)`` and the ideal vertices sit symmetrically
    below it at angle ``alpha = arctan(e^((d - a0 - a1) / 2))`` from the
    downward axis.

    :return: ``(x0, x1, y)``
    """
    alpha = np.arctan(np.exp((d - a0 - a1) / 2.0))
    ideal = []
    for a, phi in ((a0, -np.pi / 2 + alpha), (a1, -np.pi / 2 - alpha)):
        scale = np.exp(a) / np.cos(alpha)
        ideal.append(Horoball(scale * np.array([1.0, np.cos(phi), np.sin(phi)])))
    return ideal[0], ideal[1], HalfSpace([0.0, 0.0, 1.0])


def pent_build(x, y0, y1, *, tol=TOL_OBJ, tol_parallel=TOL_PARALLEL):
    """Measure the pentagon cut out by a horoball and two half-spaces.

    w_i, the foot of the common perpendicular on the plane of y_i, is
    ``(L y_i + y_(1-i)) / sqrt(L^2 - 1)`` with ``L = -y0 o y1``. v_i is the
    foot of x on the plane of y_i and u_i the point where the geodesic from
    v_i toward x meets the horosphere.

    :param Horoball x: horoball at the ideal vertex.
    :param HalfSpace y0: first leg's half-space.
    :param HalfSpace y1: second leg's half-space.
    :return: PentData
    """
    _check_plane(x, y0, y1)
    _check_side(x, y0, "x o y0", tol)
    _check_side(x, y1, "x o y1", tol)
    relation = plane_pair_relation(y0, y1, tol=tol_parallel)
    if relation.variant is not PlaneRelation.ULTRAPARALLEL:
        raise errors.NotUltraparallel(
            "Leg planes are %s, not ultraparallel" % relation.variant.value
        )
    if not relation.opposed:
        raise errors.OrientationError(
            "Half-spaces must face each other, y0 o y1 = %r"
            % lorentz.ldot(y0.y, y1.y)
        )
    pairing = -lorentz.ldot(y0.y, y1.y)
    root = np.sqrt(pairing**2 - 1.0)
    feet = []
    for own, other in ((y0.y, y1.y), (y1.y, y0.y)):
        foot = (pairing * own + other) / root
        if foot[0] <= 0:
            raise errors.OrientationError(
                "Perpendicular foot is not a positive vector: %s" % foot
            )
        feet.append(HPoint(foot, tol=tol))
    w0, w1 = feet
    d = float(np.arccosh(pairing))
    closing = abs(np.cosh(d) + lorentz.ldot(w0.v, w1.v))
    if closing > tol * max(1.0, pairing):
        logger.warning("Perpendicular feet miss cosh d by %r", closing)
    near = [sdist_plane_horosphere(h, x, tol=tol) for h in (y0, y1)]
    a0, a1 = (item.distance.value for item in near)
    v0, v1 = (item.foot for item in near)
    u0, u1 = (geodesic_eval(item.witness, a) for item, a in zip(near, (a0, a1)))
    data = PentData(
        x=x,
        y0=y0,
        y1=y1,
        d=d,
        ell0=dist_point_point(w0, v0),
        ell1=dist_point_point(w1, v1),
        a0=a0,
        a1=a1,
        theta=horocyclic_distance(x, u0, u1, tol=tol),
        w0=w0,
        w1=w1,
        v0=v0,
        v1=v1,
        u0=u0,
        u1=u1,
    )
    logger.debug(
        "Pentagon: d=%r ell=(%r, %r) a=(%r, %r) theta=%r",
        d,
        data.ell0,
        data.ell1,
        a0,
        a1,
        data.theta,
    )
    return data


def pent_sides(d, a0, a1):
    """Leg lengths ``(ell0, ell1)`` of the pentagon with side d and offsets a_i."""
    if not d > 0:
        raise errors.DomainError("Side opposite the ideal vertex must be positive")
    legs = []
    for own, other in ((a0, a1), (a1, a0)):
        quotient = (np.exp(own) * np.cosh(d) + np.exp(other)) / (
            np.exp(own) * np.sinh(d)
        )
        if quotient < 1.0:
            raise errors.NotRealizable(
                "Pentagon does not close: cosh of a leg would be %r" % quotient
            )
        legs.append(float(np.arccosh(quotient)))
    return tuple(legs)


def pent_arc(d, a0, a1, ell0, ell1):
    """float: The horocyclic arc, ``sinh(d) sinh(ell0) / e^a1``.

    Raises :class:`~biffobear_hyperboloid.errors.InconsistentInputs` when
    ``sinh(ell0) / e^a1`` and ``sinh(ell1) / e^a0`` disagree.
    """
    first = np.sinh(ell0) / np.exp(a1)
    second = np.sinh(ell1) / np.exp(a0)
    if _relative(first, second) > _ARC_CONSISTENCY:
        raise errors.InconsistentInputs(
            "Leg ratios disagree: %r vs %r" % (float(first), float(second))
        )
    return float(np.sinh(d) * first)


def pent_arc_radical(x, y0, y1):
    """float: theta in closed form from the three pairings."""
    p0 = lorentz.ldot(x.x, y0.y)
    p1 = lorentz.ldot(x.x, y1.y)
    c = lorentz.ldot(y0.y, y1.y)
    return float(np.sqrt(p0**2 + p1**2 - 2.0 * c * p0 * p1) / (p0 * p1))


def pent_residuals(data):
    """Residuals of the pentagon laws on measured data.

    :return: dict with ``side_law``, ``arc_law``, ``right_angle``,
        ``arc_radical`` and ``closing``.
    """
    sides = []
    legs = ((data.ell0, data.a0, data.a1), (data.ell1, data.a1, data.a0))
    for ell, own, other in legs:
        quotient = (np.exp(own) * np.cosh(data.d) + np.exp(other)) / (
            np.exp(own) * np.sinh(data.d)
        )
        sides.append(abs(np.cosh(ell) - quotient) / max(1.0, quotient))
    ratios = (
        data.theta / np.sinh(data.d),
        np.sinh(data.ell0) / np.exp(data.a1),
        np.sinh(data.ell1) / np.exp(data.a0),
    )
    return {
        "side_law": float(max(sides)),
        "arc_law": float(_spread(ratios)),
        "right_angle": float(
            max(
                _right_angle(data.w0, data.w1, data.v0),
                _right_angle(data.w1, data.w0, data.v1),
                _right_angle(data.v0, data.w0, data.x),
                _right_angle(data.v1, data.w1, data.x),
            )
        ),
        "arc_radical": float(
            abs(data.theta - pent_arc_radical(data.x, data.y0, data.y1))
        ),
        "closing": float(
            abs(np.cosh(data.d) + lorentz.ldot(data.w0.v, data.w1.v)) / np.cosh(data.d)
        ),
    }


def pent_from_scalars(d, a0, a1):
    """A canonical pentagon with the given d, a0 and a1.

    The leg planes are symmetric about the vertical axis,
    ``y0 = (sinh(d/2), -cosh(d/2), 0)`` and ``y1 = (sinh(d/2), cosh(d/2), 0)``,
    and the ideal vertex is placed so that ``x o y_i = -e^a_i``.

    :return: ``(x, y0, y1)``
    """
    if not d > 0:
        raise errors.DomainError("Side opposite the ideal vertex must be positive")
    sh, ch = np.sinh(d / 2.0), np.cosh(d / 2.0)
    e0, e1 = np.exp(a0), np.exp(a1)
    scale = (e0 + e1) / (2.0 * sh)
    cos = (e0 - e1) / (2.0 * scale * ch)
    sin = np.sqrt(1.0 - cos**2)
    return (
        Horoball(scale * np.array([1.0, cos, sin])),
        HalfSpace([sh, -ch, 0.0]),
        HalfSpace([sh, ch, 0.0]),
    )

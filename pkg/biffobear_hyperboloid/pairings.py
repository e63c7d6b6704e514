# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT
"""
`biffobear_hyperboloid.pairings`
================================================================================

Geometric meaning of Lorentzian pairings between points, horoballs and
half-spaces: distances, angles, nearest points and the geodesics realizing
them.

Signed distance conventions:

* point to horosphere: ``e^d = -v o x``, positive outside the horoball.
* horosphere to horosphere: ``e^d = -(x0 o x1) / 2``.
* point to plane: ``sinh d = v o y``, negative inside the half-space.
* plane to horosphere: ``e^h = -x o y``.

Witness curves are returned as :class:`~biffobear_hyperboloid.objects.Geodesic`
values, parametrized so that the nearest points sit at the parameters quoted
in each function's docstring.
"""

import logging
from collections import namedtuple
from enum import Enum

import numpy as np

from biffobear_hyperboloid import errors, lorentz
from biffobear_hyperboloid.objects import TOL_OBJ, Geodesic, HPoint, on_horosphere

logger = logging.getLogger(__name__)

TOL_PARALLEL = 1e-9

SignedDistance = namedtuple("SignedDistance", ["value", "convention"])
PlanePairRelation = namedtuple("PlanePairRelation", ["variant", "eta", "opposed"])
HorosphereDistance = namedtuple("HorosphereDistance", ["distance", "foot", "witness"])
HorosphereGap = namedtuple("HorosphereGap", ["distance", "feet", "witness"])


class PlaneRelation(Enum):
    """How two hyperplanes sit relative to each other."""

    INTERSECTING = "intersecting"
    ULTRAPARALLEL = "ultraparallel"
    PARALLEL = "parallel"


def dist_point_point(p, q):
    """float: Hyperbolic distance, ``cosh d = -p o q``.

    Evaluated through the chord ``(p - q) o (p - q) = 4 sinh^2(d / 2)``, which
    keeps full precision for nearby points.
    """
    chord = np.sqrt(max(lorentz.norm_squared(p.v - q.v), 0.0))
    return float(2.0 * np.arcsinh(chord / 2.0))


def sdist_point_horosphere(p, b):
    """Signed distance from a point to a horosphere, with nearest point.

    The witness is the geodesic through p in the direction of the centre of
    the horoball; it passes p at t = 0 and the foot at t = d.
    """
    pairing = -lorentz.ldot(p.v, b.x)
    dist = float(np.log(pairing))
    foot = HPoint(0.5 * (1.0 - 1.0 / pairing**2) * b.x + p.v / pairing)
    witness = Geodesic(p, -p.v + b.x / pairing)
    return HorosphereDistance(SignedDistance(dist, "point-horosphere"), foot, witness)


def _check_independent_ideal(x0, x1):
    pairing = -lorentz.ldot(x0, x1)
    if pairing <= TOL_OBJ * np.linalg.norm(x0) * np.linalg.norm(x1):
        raise errors.DependentIdealPoints(
            "Light-like vectors determine the same ideal point (x0 o x1 = %r)"
            % -pairing
        )
    return pairing


def sdist_horosphere_horosphere(b0, b1):
    """Minimum signed distance between two horospheres.

    The witness runs from the centre of ``b1`` to the centre of ``b0``; its
    points at t = +d/2 and t = -d/2 are the feet on S0 and S1 respectively.

    :return: distance, ``(foot on S0, foot on S1)`` and the witness geodesic.
    """
    pairing = _check_independent_ideal(b0.x, b1.x)
    dist = float(np.log(0.5 * pairing))
    scale = 1.0 / np.sqrt(2.0 * pairing)
    witness = Geodesic(HPoint(scale * (b0.x + b1.x)), scale * (b0.x - b1.x))
    feet = (
        HPoint(witness.at(dist / 2.0)),
        HPoint(witness.at(-dist / 2.0)),
    )
    return HorosphereGap(SignedDistance(dist, "horosphere-horosphere"), feet, witness)


def sdist_point_plane(p, h):
    """SignedDistance: ``sinh d = p o y``, negative inside the half-space."""
    return SignedDistance(float(np.arcsinh(lorentz.ldot(p.v, h.y))), "point-plane")


def sdist_plane_horosphere(h, b, *, tol=TOL_OBJ):
    """Minimal signed distance from a hyperplane to a horosphere.

    The centre of the horoball must lie strictly inside the ideal boundary of
    the half-space. The witness starts at the foot on the plane (t = 0) and
    meets the horosphere at t = h.
    """
    pairing = lorentz.ldot(b.x, h.y)
    if pairing >= -tol * np.linalg.norm(b.x):
        raise errors.IdealPointNotInterior(
            "Ideal point is not inside the half-space (x o y = %r)" % pairing
        )
    dist = float(np.log(-pairing))
    foot = HPoint(-b.x / pairing + h.y)
    witness = Geodesic(foot, -h.y)
    return HorosphereDistance(SignedDistance(dist, "plane-horosphere"), foot, witness)


def _check_independent_normals(y1, y2, tol):
    if min(np.linalg.norm(y1 - y2), np.linalg.norm(y1 + y2)) <= tol:
        raise errors.DependentNormals("Normals determine the same hyperplane")


def plane_pair_relation(h1, h2, *, tol=TOL_PARALLEL):
    """Classify two hyperplanes by the pairing of their normals.

    * ``|y1 o y2| < 1``: intersecting at angle ``eta = arccos(y1 o y2)``.
    * ``|y1 o y2| > 1``: ultraparallel at distance ``eta = arccosh|y1 o y2|``;
      ``opposed`` when the pairing is negative.
    * otherwise, within the band ``tol``: parallel.
    """
    _check_independent_normals(h1.y, h2.y, tol)
    pairing = lorentz.ldot(h1.y, h2.y)
    gap = abs(pairing) - 1.0
    if abs(gap) <= tol * max(1.0, abs(pairing)):
        return PlanePairRelation(PlaneRelation.PARALLEL, None, None)
    if gap < 0:
        return PlanePairRelation(
            PlaneRelation.INTERSECTING, float(np.arccos(pairing)), None
        )
    return PlanePairRelation(
        PlaneRelation.ULTRAPARALLEL, float(np.arccosh(abs(pairing))), pairing < 0
    )


def perp_foot_plane_plane(h1, h2, *, tol=TOL_PARALLEL):
    """Feet of the common perpendicular of two ultraparallel hyperplanes.

    Each foot is the positive one of the two unit time-like vectors
    ``+-[(y1 o y2) y1 - y2] / sqrt((y1 o y2)^2 - 1)`` (and symmetrically).

    :return: ``(v1, v2)`` with v1 on the polar plane of h1, v2 on that of h2.
    """
    relation = plane_pair_relation(h1, h2, tol=tol)
    if relation.variant is not PlaneRelation.ULTRAPARALLEL:
        raise errors.NotUltraparallel(
            "Planes are %s, not ultraparallel" % relation.variant.value
        )
    pairing = lorentz.ldot(h1.y, h2.y)
    root = np.sqrt(pairing**2 - 1.0)
    feet = []
    for own, other in ((h1.y, h2.y), (h2.y, h1.y)):
        foot = (pairing * own - other) / root
        if foot[0] < 0:
            foot = -foot
        # The foot lies in the other half-space iff it pairs negatively with its normal
        logger.debug(
            "Perpendicular foot %s, inside opposite half-space: %s",
            foot,
            lorentz.ldot(foot, other) < 0,
        )
        feet.append(HPoint(foot))
    return tuple(feet)


def horocyclic_distance(b, u0, u1, *, tol=TOL_OBJ):
    """float: Intrinsic flat distance on a horosphere.

    ``d_S(u0, u1) = sqrt(-2 (1 + u0 o u1))``; both points must lie on the
    horosphere of b.
    """
    for point in (u0, u1):
        if not on_horosphere(b, point, tol=tol):
            raise errors.NotOnHorosphere(
                "Point is not on the horosphere (u o x = %r)"
                % lorentz.ldot(point.v, b.x)
            )
    return float(np.sqrt(max(-2.0 * (1.0 + lorentz.ldot(u0.v, u1.v)), 0.0)))


def tangent_angle(u, w):
    """float: Angle between two tangent vectors at the same point."""
    scale = np.sqrt(lorentz.norm_squared(u) * lorentz.norm_squared(w))
    cos = lorentz.ldot(u, w) / scale
    return float(np.arccos(np.clip(cos, -1.0, 1.0)))

# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT
"""
`biffobear_hyperboloid.tetra`
================================================================================

Truncated tetrahedra of H^3: four pairwise ultraparallel planes P_0..P_3
with outward normals y_0..y_3, all mutually opposed. ``L[i][j] = -y_i o y_j``
is the cosh of the distance between P_i and P_j, realized by the internal
edge joining them.

Each pair of opposite internal edges is joined by a transversal, the
shortest arc between the geodesics carrying the two edges. Its length T
depends on the six entries of L only. With the edges parametrized from
their feet, the cosh of the distance between the points at s and t is

    D(s, t) = -cosh(s) cosh(t) vv + cosh(s) sinh(t) vy
              + sinh(s) cosh(t) yv - sinh(s) sinh(t) yy

and ``tau = tanh(t0)`` at the minimum is the smaller root of
``a tau^2 + b tau + a = 0``.

Implementation Notes
--------------------

* Indices of planes run over 0..3. An edge pair ``((i, j), (k, l))`` names
  the edge from P_i to P_j and the edge from P_k to P_l.
* The edge from P_i to P_j is anchored at its foot on P_i and runs into the
  half-space of P_i, ``s -> cosh(s) v_i - sinh(s) y_i``; it reaches P_j at
  ``s = arccosh(L[i][j])``.
"""

import itertools
import logging
from collections import namedtuple

import numpy as np

from biffobear_hyperboloid import errors, lorentz
from biffobear_hyperboloid.objects import (
    TOL_OBJ,
    Geodesic,
    HalfSpace,
    HPoint,
    geodesic_eval,
    in_halfspace,
)
from biffobear_hyperboloid.pairings import TOL_PARALLEL

logger = logging.getLogger(__name__)

TOL_DEG = 1e-8
TOL_QUAD = 1e-14

# Slack on the edge parameters when flagging transversal endpoints
_EDGE_SLACK = 1e-9

TRANSVERSAL_PAIRS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))

Transversal = namedtuple(
    "Transversal",
    [
        "edge_pair",
        "s0",
        "t0",
        "cosh_T",
        "T",
        "endpoints",
        "degenerate",
        "within_edges",
    ],
)
EdgePairings = namedtuple("EdgePairings", ["vv", "vy", "yv", "yy"])
Quadratic = namedtuple("Quadratic", ["a", "b", "smaller", "larger"])


class TruncatedTetrahedron:
    """Four pairwise ultraparallel, mutually opposed half-spaces of H^3.

    Build instances with :func:`tetra_from_normals` or
    :func:`tetra_from_edge_lengths`; both canonicalize signs and time
    orientation before calling this constructor.

    :param normals: four HalfSpace values.
    :param L: the 4 x 4 matrix ``-y_i o y_j`` with unit diagonal.
    """

    def __init__(self, normals, L):
        self._normals = tuple(normals)
        matrix = np.array(L, dtype=float)
        matrix.setflags(write=False)
        self._L = matrix

    @property
    def normals(self):
        """tuple: The four HalfSpace values."""
        return self._normals

    @property
    def L(self):  # pylint: disable=invalid-name
        """numpy.ndarray: Cosh of the distances between the planes."""
        return self._L

    def __repr__(self):
        return "TruncatedTetrahedron(L=%s)" % np.array2string(self._L, precision=6)


def _check_pair(pair, other):
    if sorted(pair + other) != [0, 1, 2, 3]:
        raise ValueError(
            "Edge pair %s, %s must use each of the planes 0..3 once" % (pair, other)
        )


def opposite(i, j):
    """tuple: The edge opposite the edge from P_i to P_j."""
    rest = tuple(sorted({0, 1, 2, 3} - {i, j}))
    if len(rest) != 2:
        raise ValueError("Select two distinct planes from 0..3")
    return rest


def _feet_vectors(normals, L):
    """Raw foot vectors ``feet[i][j]``, the foot on P_i of the edge to P_j."""
    feet = {}
    for i, j in itertools.permutations(range(4), 2):
        root = np.sqrt(L[i][j] ** 2 - 1.0)
        feet[i, j] = (L[i][j] * normals[i] + normals[j]) / root
    return feet


def _ultraparallel(pairings, tol):
    for (i, j), pairing in pairings.items():
        if abs(pairing) <= 1.0 + tol:
            raise errors.NotUltraparallel(
                "Planes %s and %s are not ultraparallel (y o y' = %r)"
                % (i, j, pairing)
            )


def _orient_feet(normals, L, flip):
    """Make every foot a positive vector, applying ``flip`` if needed."""
    feet = _feet_vectors(normals, L)
    if feet[0, 1][0] < 0:
        logger.debug("Feet point to the past, reorienting the normals")
        normals = [flip(y) for y in normals]
        feet = _feet_vectors(normals, L)
    negative = [key for key, foot in feet.items() if foot[0] <= 0]
    if negative:
        logger.warning("Feet %s are not positive after orientation", negative)
        raise errors.InconsistentOrientation(
            "No time orientation makes every foot positive, failing feet %s"
            % negative
        )
    return normals


def _check_tetra_dim(normals):
    if len(normals) != 4:
        raise errors.DimensionMismatch("Expected four planes, got %s" % len(normals))
    for h in normals:
        if h.dim != 3:
            raise errors.DimensionMismatch(
                "Truncated tetrahedra live in H^3, got a half-space of H^%s" % h.dim
            )


def tetra_from_normals(*normals, tol=TOL_PARALLEL):
    """Build a truncated tetrahedron from four half-spaces of H^3.

    The sign of y_0 is kept and every other normal is flipped so that it
    pairs negatively with y_0. The result must pair negatively pairwise.
    When the feet of the internal edges point to the past, all normals are
    negated together.
    """
    _check_tetra_dim(normals)
    vectors = [h.y for h in normals]
    _ultraparallel(
        {
            (i, j): lorentz.ldot(vectors[i], vectors[j])
            for i, j in itertools.combinations(range(4), 2)
        },
        tol,
    )
    for index in range(1, 4):
        if lorentz.ldot(vectors[0], vectors[index]) > 0:
            logger.debug("Flipping normal %s", index)
            vectors[index] = -vectors[index]
    for i, j in itertools.combinations(range(1, 4), 2):
        if lorentz.ldot(vectors[i], vectors[j]) > 0:
            raise errors.InconsistentOrientation(
                "No choice of signs makes normals %s and %s opposed" % (i, j)
            )
    L = -lorentz.gram(vectors)
    np.fill_diagonal(L, 1.0)
    vectors = _orient_feet(vectors, L, np.negative)
    return TruncatedTetrahedron([HalfSpace(y) for y in vectors], L)


def _time_reverse(vec):
    reversed_vec = np.array(vec, dtype=float)
    reversed_vec[0] = -reversed_vec[0]
    return reversed_vec


def tetra_from_edge_lengths(L, *, tol=TOL_PARALLEL, tol_realize=lorentz.TOL_REALIZE):
    """Realize a truncated tetrahedron from the cosh of its plane distances.

    The normals realize ``G = 2 I - L`` (``G[i][i] = 1``, ``G[i][j] = -L[i][j]``)
    through :func:`~biffobear_hyperboloid.lorentz.realize_gram`. If the feet
    point to the past the time coordinate of every normal is negated.

    :param L: symmetric 4 x 4 matrix, unit diagonal, off-diagonals above 1.
    """
    L = np.asarray(L, dtype=float)
    if L.shape != (4, 4):
        raise errors.DimensionMismatch("Expected a 4 x 4 matrix, got %s" % (L.shape,))
    if not np.all(np.isfinite(L)):
        raise errors.NonFiniteVector("Entries must be finite")
    if not np.allclose(L, L.T, rtol=0.0, atol=tol_realize * np.max(np.abs(L))):
        raise errors.GeometryError("L must be symmetric")
    if not np.allclose(np.diag(L), 1.0, rtol=0.0, atol=tol_realize):
        raise errors.GeometryError("L must have a unit diagonal")
    _ultraparallel(
        {(i, j): L[i][j] for i, j in itertools.combinations(range(4), 2)}, tol
    )
    target = 2.0 * np.eye(4) - L
    vectors = lorentz.realize_gram(target, 3)
    residual = np.max(np.abs(lorentz.gram(vectors) - target))
    if residual > tol_realize * np.max(np.abs(target)):
        raise errors.SignatureError(
            "Realized normals miss the Gram matrix by %r" % residual
        )
    vectors = _orient_feet(vectors, L, _time_reverse)
    return TruncatedTetrahedron([HalfSpace(y) for y in vectors], L)


def relabel(tetra, permutation):
    """TruncatedTetrahedron: Plane ``permutation[i]`` becomes plane i."""
    if sorted(permutation) != [0, 1, 2, 3]:
        raise ValueError("Permutation must reorder 0..3")
    return tetra_from_normals(*(tetra.normals[index] for index in permutation))


def internal_edge(tetra, i, j):
    """The internal edge from P_i to P_j.

    :return: ``(foot on P_i, foot on P_j, length)``
    """
    if i == j:
        raise ValueError("An internal edge joins two distinct planes")
    y_i, y_j = tetra.normals[i].y, tetra.normals[j].y
    cosh = tetra.L[i][j]
    root = np.sqrt(cosh**2 - 1.0)
    foot_i = HPoint((cosh * y_i + y_j) / root)
    foot_j = HPoint((cosh * y_j + y_i) / root)
    return foot_i, foot_j, float(np.arccosh(cosh))


def edge_geodesic(tetra, i, j):
    """Geodesic: The edge from P_i to P_j, anchored on P_i, tangent -y_i."""
    foot_i, _, _ = internal_edge(tetra, i, j)
    return Geodesic(foot_i, -tetra.normals[i].y)


def hat_plane(tetra, i, *, tol=TOL_DEG):
    """The plane meeting the three planes other than P_i at right angles.

    Its normal z solves ``z o y_j = 0`` for every j != i and is oriented so
    that ``z o y_i < 0``.

    :return: ``(HalfSpace, orthogonal_to_Pi)``, the flag set when the plane
        also meets P_i at right angles.
    """
    rows = np.array(
        [lorentz.minkowski(4) @ tetra.normals[j].y for j in range(4) if j != i]
    )
    _, _, vh = np.linalg.svd(rows)
    z = vh[-1]
    self_pairing = lorentz.norm_squared(z)
    if self_pairing <= tol:
        raise errors.DegenerateComplement(
            "Complement of the other three normals is not space-like (z o z = %r)"
            % self_pairing
        )
    z = z / np.sqrt(self_pairing)
    pairing = lorentz.ldot(z, tetra.normals[i].y)
    if pairing > 0:
        z = -z
    return HalfSpace(z), abs(pairing) <= tol


def is_degenerate(tetra, *, tol=TOL_DEG):
    """bool: True if some hat plane meets its own plane at right angles."""
    return any(hat_plane(tetra, i, tol=tol)[1] for i in range(4))


def member(tetra, p, *, tol=TOL_OBJ, tol_deg=TOL_DEG):
    """bool: True if p lies in every half-space and every hat half-space."""
    hats = [hat_plane(tetra, i, tol=tol_deg) for i in range(4)]
    if any(orthogonal for _, orthogonal in hats):
        raise errors.DegenerateTetrahedron(
            "Membership is undefined for a degenerate truncated tetrahedron"
        )
    return all(in_halfspace(h, p, tol=tol) for h in tetra.normals) and all(
        in_halfspace(z, p, tol=tol) for z, _ in hats
    )


def _pairings_from_lengths(x, y, a, b, c, d):
    root_x = np.sqrt(x**2 - 1.0)
    root_y = np.sqrt(y**2 - 1.0)
    return EdgePairings(
        vv=-(x * a * y + c * y + x * b + d) / (root_x * root_y),
        vy=-(x * a + c) / root_x,
        yv=-(a * y + b) / root_y,
        yy=-a,
    )


def _lengths(L, pair, other):
    (i, j), (k, l) = pair, other
    return L[i][j], L[k][l], L[i][k], L[i][l], L[j][k], L[j][l]


def _matrix(tetra):
    return tetra.L if isinstance(tetra, TruncatedTetrahedron) else np.asarray(tetra)


def edge_pairings(L, pair, other):
    """The four pairings behind D(s, t), from the entries of L alone.

    With v_i the foot on P_i of the edge ``pair`` and v_k the foot on P_k of
    the edge ``other``:

    * ``vv = v_i o v_k``
    * ``vy = v_i o y_k``
    * ``yv = y_i o v_k``
    * ``yy = y_i o y_k``

    :param L: a TruncatedTetrahedron or its L matrix.
    """
    pair, other = tuple(pair), tuple(other)
    _check_pair(pair, other)
    return _pairings_from_lengths(*_lengths(_matrix(L), pair, other))


def _evaluate(pairings, s, t):
    ch_s, sh_s = np.cosh(s), np.sinh(s)
    ch_t, sh_t = np.cosh(t), np.sinh(t)
    return (
        -ch_s * ch_t * pairings.vv
        + ch_s * sh_t * pairings.vy
        + sh_s * ch_t * pairings.yv
        - sh_s * sh_t * pairings.yy
    )


def distance_function(tetra, pair, other, s, t):
    """Cosh of the distance between the points at s and t on two edges.

    ``s`` runs along the edge ``pair`` and ``t`` along ``other``; both may be
    arrays, which broadcast.
    """
    value = _evaluate(edge_pairings(tetra, pair, other), s, t)
    return float(value) if np.ndim(value) == 0 else value


def factored_distance(tetra, pair, other, s, t):
    """D(s, t) written through the six edge cosh-lengths.

    ``[a ch(l1 - s) ch(l2 - t) + b ch(l1 - s) ch(t) + c ch(s) ch(l2 - t)
    + d ch(s) ch(t)] / (sh(l1) sh(l2))`` with ``x = ch(l1)``, ``y = ch(l2)``
    and (a, b, c, d) the cosh-lengths from P_i to P_k, P_i to P_l, P_j to P_k
    and P_j to P_l.
    """
    pair, other = tuple(pair), tuple(other)
    _check_pair(pair, other)
    x, y, a, b, c, d = _lengths(_matrix(tetra), pair, other)
    ell1, ell2 = np.arccosh(x), np.arccosh(y)
    value = (
        a * np.cosh(ell1 - s) * np.cosh(ell2 - t)
        + b * np.cosh(ell1 - s) * np.cosh(t)
        + c * np.cosh(s) * np.cosh(ell2 - t)
        + d * np.cosh(s) * np.cosh(t)
    ) / (np.sinh(ell1) * np.sinh(ell2))
    return float(value) if np.ndim(value) == 0 else value


def _quadratic(pairings, tol_quad):
    vv, vy, yv, yy = pairings
    a = yy * yv - vv * vy
    b = vv**2 + vy**2 - yv**2 - yy**2
    if abs(a) <= tol_quad * abs(b):
        raise errors.IllConditioned(
            "Critical-point quadratic collapses: a = %r, b = %r" % (a, b)
        )
    discriminant = b**2 - 4.0 * a**2
    if discriminant < 0:
        raise errors.IllConditioned(
            "Critical-point quadratic has no real roots: a = %r, b = %r" % (a, b)
        )
    larger_magnitude = b + np.copysign(np.sqrt(discriminant), b)
    smaller = -2.0 * a / larger_magnitude
    larger = -larger_magnitude / (2.0 * a)
    if smaller > larger:
        smaller, larger = larger, smaller
    return Quadratic(float(a), float(b), float(smaller), float(larger))


def transversal_quadratic(tetra, pair, other, *, tol_quad=TOL_QUAD):
    """Quadratic: Coefficients and roots of ``a tau^2 + b tau + a = 0``."""
    return _quadratic(edge_pairings(tetra, pair, other), tol_quad)


def _critical_point(pairings, tol_quad):
    quad = _quadratic(pairings, tol_quad)
    tanh_t = quad.smaller
    tanh_s = (pairings.yv - tanh_t * pairings.yy) / (
        pairings.vv - tanh_t * pairings.vy
    )
    if not (abs(tanh_t) < 1.0 and abs(tanh_s) < 1.0):
        raise errors.IllConditioned(
            "Critical point escapes to infinity: tanh s = %r, tanh t = %r"
            % (tanh_s, tanh_t)
        )
    s0, t0 = float(np.arctanh(tanh_s)), float(np.arctanh(tanh_t))
    return s0, t0, float(_evaluate(pairings, s0, t0))


def transversal(tetra, pair, other, *, tol_deg=TOL_DEG, tol_quad=TOL_QUAD):
    """The shortest arc between the geodesics of two opposite internal edges.

    :return: Transversal. ``within_edges`` records whether both endpoints fall
        on the edges themselves rather than their extensions.
    """
    pair, other = tuple(pair), tuple(other)
    pairings = edge_pairings(tetra, pair, other)
    s0, t0, cosh_T = _critical_point(pairings, tol_quad)
    degenerate = cosh_T <= 1.0 + tol_deg
    start = geodesic_eval(edge_geodesic(tetra, *pair), s0)
    end = start if degenerate else geodesic_eval(edge_geodesic(tetra, *other), t0)
    length = 0.0 if degenerate else float(np.arccosh(max(cosh_T, 1.0)))
    ell1, ell2 = np.arccosh(tetra.L[pair]), np.arccosh(tetra.L[other])
    within = bool(
        -_EDGE_SLACK <= s0 <= ell1 + _EDGE_SLACK
        and -_EDGE_SLACK <= t0 <= ell2 + _EDGE_SLACK
    )
    if not within:
        logger.warning(
            "Transversal of %s, %s leaves its edges: s0=%r of %r, t0=%r of %r",
            pair,
            other,
            s0,
            ell1,
            t0,
            ell2,
        )
    return Transversal(
        edge_pair=(pair, other),
        s0=s0,
        t0=t0,
        cosh_T=cosh_T,
        T=length,
        endpoints=(start, end),
        degenerate=degenerate,
        within_edges=within,
    )


def transversal_length(x, y, a, b, c, d, *, tol_deg=TOL_DEG, tol_quad=TOL_QUAD):
    """float: cosh T(x, y; a, b, c, d) from the edge cosh-lengths alone.

    x and y are the cosh-lengths of the two opposite edges; a, b, c and d
    those of the edges from P_i to P_k, P_i to P_l, P_j to P_k and P_j to
    P_l.
    """
    if x <= 1.0 or y <= 1.0:
        raise errors.DomainError("Edge cosh-lengths x and y must exceed 1")
    cosh_T = _critical_point(_pairings_from_lengths(x, y, a, b, c, d), tol_quad)[2]
    if cosh_T < 1.0 - tol_deg:
        raise errors.NotRealizable(
            "No truncated tetrahedron has these edges: cosh T = %r" % cosh_T
        )
    return cosh_T


def transversal_bound(x, y, L):  # pylint: disable=invalid-name
    """float: Lower bound ``2 L / sqrt((x - 1)(y - 1))`` for cosh T.

    L is the smallest of a, b, c and d; equality holds when all four equal L.
    """
    if x <= 1.0 or y <= 1.0 or L <= 1.0:
        raise errors.DomainError(
            "Bound needs x, y and L above 1, got x = %r, y = %r, L = %r"
            % (x, y, L)
        )
    return float(2.0 * L / np.sqrt((x - 1.0) * (y - 1.0)))

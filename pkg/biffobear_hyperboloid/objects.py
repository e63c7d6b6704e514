# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT
"""
`biffobear_hyperboloid.objects`
================================================================================

Validated geometric objects of hyperbolic space in the hyperboloid model.

* :class:`HPoint` - a positive unit time-like vector, a point of H^n.
* :class:`Horoball` - a positive light-like vector x. It determines the
  horosphere ``{v : v o x = -1}`` and the horoball ``{v : v o x >= -1}``.
  Scaling x changes the horoball, so it is never normalized.
* :class:`HalfSpace` - a unit space-like vector y, the outward normal of the
  half-space ``{v : v o y <= 0}`` bounded by the polar plane ``{v o y = 0}``.
* :class:`Geodesic` - a point and a unit tangent there, parametrized by
  arclength.

Points and half-spaces are normalized on construction after their invariant
band has been checked.
"""

import numpy as np

from biffobear_hyperboloid import errors, lorentz

TOL_OBJ = 1e-9

# Below this tangent norm the exponential map returns its base point
_EXP_CUTOFF = 1e-14


def _band(tol, a, b=None):
    """Roundoff-aware band for the pairing of a with b (or itself)."""
    b = a if b is None else b
    return tol * max(1.0, float(np.linalg.norm(a) * np.linalg.norm(b)))


class HPoint:
    """A point of H^n.

    :param coords: n + 1 coordinates with ``|v o v + 1| <= tol`` and a
        positive first entry. The band widens with the Euclidean norm squared
        once that exceeds 1.
    :param float tol: width of the invariant band.
    """

    kind = "point"

    def __init__(self, coords, *, tol=TOL_OBJ):
        vec = lorentz.as_lvec(coords)
        if abs(lorentz.norm_squared(vec) + 1.0) > _band(tol, vec):
            raise errors.NotTimeLike(
                "Point must satisfy v o v = -1, got %r" % lorentz.norm_squared(vec)
            )
        if vec[0] <= 0:
            raise errors.NotPositive("Point must have a positive first coordinate")
        # Rebuild the time coordinate from the space part
        space = vec[1:]
        time = np.sqrt(1.0 + space @ space)
        self._v = lorentz.as_lvec(np.concatenate(([time], space)))

    @property
    def v(self):
        """numpy.ndarray: The unit time-like vector."""
        return self._v

    @property
    def dim(self):
        """int: The dimension n of the hyperbolic space."""
        return self._v.shape[0] - 1

    def __repr__(self):
        return "HPoint(%s)" % np.array2string(self._v, precision=6)


class Horoball:
    """A horoball, encoded by a positive light-like vector.

    :param coords: n + 1 coordinates with ``|x o x| <= tol * |x|^2`` and a
        positive first entry.
    """

    kind = "horoball"

    def __init__(self, coords, *, tol=TOL_OBJ):
        vec = lorentz.as_lvec(coords)
        if abs(lorentz.norm_squared(vec)) > tol * float(np.dot(vec, vec)):
            raise errors.NotLightLike(
                "Horoball vector must be light-like, got x o x = %r"
                % lorentz.norm_squared(vec)
            )
        if vec[0] <= 0:
            raise errors.NotPositive("Horoball vector must be positive")
        self._x = vec

    @property
    def x(self):
        """numpy.ndarray: The positive light-like vector."""
        return self._x

    @property
    def dim(self):
        """int: The dimension n of the hyperbolic space."""
        return self._x.shape[0] - 1

    def __repr__(self):
        return "Horoball(%s)" % np.array2string(self._x, precision=6)


class HalfSpace:
    """A half-space, encoded by its unit outward normal.

    :param coords: n + 1 coordinates with ``|y o y - 1| <= tol``.
    """

    kind = "halfspace"

    def __init__(self, coords, *, tol=TOL_OBJ):
        vec = lorentz.as_lvec(coords)
        if abs(lorentz.norm_squared(vec) - 1.0) > _band(tol, vec):
            raise errors.NotSpaceLike(
                "Normal must satisfy y o y = 1, got %r" % lorentz.norm_squared(vec)
            )
        self._y = lorentz.as_lvec(vec / np.sqrt(lorentz.norm_squared(vec)))

    @property
    def y(self):
        """numpy.ndarray: The unit space-like outward normal."""
        return self._y

    @property
    def dim(self):
        """int: The dimension n of the hyperbolic space."""
        return self._y.shape[0] - 1

    def flipped(self):
        """HalfSpace: The complementary half-space, with normal -y."""
        return HalfSpace(-self._y)

    def __repr__(self):
        return "HalfSpace(%s)" % np.array2string(self._y, precision=6)


class Geodesic:
    """A unit-speed geodesic ``t -> cosh(t) p + sinh(t) u``.

    :param HPoint p: the point at t = 0.
    :param u: unit space-like tangent at p.
    """

    kind = "geodesic"

    def __init__(self, p, u, *, tol=TOL_OBJ):
        u = lorentz.as_lvec(u)
        if abs(lorentz.norm_squared(u) - 1.0) > _band(tol, u):
            raise errors.NotSpaceLike(
                "Tangent must be a unit vector, got u o u = %r"
                % lorentz.norm_squared(u)
            )
        if abs(lorentz.ldot(p.v, u)) > _band(tol, p.v, u):
            raise errors.NotTangent(
                "Tangent must be orthogonal to the base point, got %r"
                % lorentz.ldot(p.v, u)
            )
        self._p = p
        self._u = u

    @property
    def p(self):
        """HPoint: The point at parameter 0."""
        return self._p

    @property
    def u(self):
        """numpy.ndarray: The unit tangent at parameter 0."""
        return self._u

    def at(self, t):
        """numpy.ndarray: The raw vector at parameter t (arrays broadcast)."""
        t = np.asarray(t, dtype=float)[..., np.newaxis]
        return np.cosh(t) * self._p.v + np.sinh(t) * self._u

    def __repr__(self):
        return "Geodesic(%r, %s)" % (self._p, np.array2string(self._u, precision=6))


def _on_hyperboloid(vec):
    """Wrap a vector known to lie on the hyperboloid, renormalizing roundoff."""
    return HPoint(vec, tol=TOL_OBJ)


def normalize_point(coords):
    """Rescale a positive time-like vector onto the hyperboloid."""
    vec = lorentz.as_lvec(coords)
    cls = lorentz.classify(vec)
    if cls.kind is not lorentz.CausalKind.TIME_LIKE:
        raise errors.NotTimeLike(
            "Expected a time-like vector, got %s" % cls.kind.value
        )
    if not cls.positive:
        raise errors.NotPositive("Expected a positive time-like vector")
    return HPoint(vec / np.sqrt(-lorentz.norm_squared(vec)))


def geodesic_eval(geodesic, t):
    """HPoint: The point at arclength t along the geodesic."""
    return _on_hyperboloid(geodesic.at(t))


def exp_map(p, w, *, tol=TOL_OBJ):
    """Exponential map of H^n at p applied to the tangent vector w."""
    w = lorentz.as_lvec(w)
    if abs(lorentz.ldot(w, p.v)) > _band(tol, w, p.v):
        raise errors.NotTangent(
            "w is not tangent at p: w o p = %r" % lorentz.ldot(w, p.v)
        )
    norm = np.sqrt(max(lorentz.norm_squared(w), 0.0))
    if norm <= _EXP_CUTOFF:
        return p
    return _on_hyperboloid(np.cosh(norm) * p.v + np.sinh(norm) / norm * w)


def horosphere_chart(b, u0, w, *, tol=TOL_OBJ):
    """The isometry F(w) = u0 + w + (w o w / 2) x from T_u0 S onto S.

    :param Horoball b: the horoball whose horosphere is S.
    :param HPoint u0: a point on S.
    :param w: a vector orthogonal to both u0 and x.
    """
    if not on_horosphere(b, u0, tol=tol):
        raise errors.NotOnHorosphere(
            "u0 o x = %r, expected -1" % lorentz.ldot(u0.v, b.x)
        )
    w = lorentz.as_lvec(w)
    if abs(lorentz.ldot(w, u0.v)) > _band(tol, w, u0.v) or abs(
        lorentz.ldot(w, b.x)
    ) > _band(tol, w, b.x):
        raise errors.NotTangent("w must be orthogonal to u0 and to x")
    return _on_hyperboloid(u0.v + w + 0.5 * lorentz.norm_squared(w) * b.x)


def tangent_toward(p, target):
    """Unit tangent at p of the geodesic heading to ``target``.

    ``target`` may be another point or a positive light-like vector (an ideal
    point); in both cases the tangent is the normalized projection of the
    target onto the tangent space at p.
    """
    target = np.asarray(getattr(target, "v", getattr(target, "x", target)), float)
    direction = target + lorentz.ldot(p.v, target) * p.v
    return direction / np.sqrt(lorentz.norm_squared(direction))


def on_horosphere(b, p, *, tol=TOL_OBJ):
    """bool: True if ``p o x = -1`` within tol."""
    return abs(lorentz.ldot(p.v, b.x) + 1.0) <= _band(tol, p.v, b.x)


def in_horoball(b, p, *, tol=TOL_OBJ):
    """bool: True if ``p o x >= -1`` within tol."""
    return lorentz.ldot(p.v, b.x) >= -1.0 - _band(tol, p.v, b.x)


def in_halfspace(h, p, *, tol=TOL_OBJ):
    """bool: True if ``p o y <= 0`` within tol."""
    return lorentz.ldot(p.v, h.y) <= _band(tol, p.v, h.y)


def on_polar_plane(h, p, *, tol=TOL_OBJ):
    """bool: True if ``p o y = 0`` within tol."""
    return abs(lorentz.ldot(p.v, h.y)) <= _band(tol, p.v, h.y)


_KINDS = {cls.kind: cls for cls in (HPoint, Horoball, HalfSpace)}


def to_json(obj):
    """dict: JSON-ready encoding ``{"kind": ..., "coords": [...]}``."""
    if isinstance(obj, Geodesic):
        return {
            "kind": obj.kind,
            "point": [float(c) for c in obj.p.v],
            "tangent": [float(c) for c in obj.u],
        }
    coords = {HPoint: "v", Horoball: "x", HalfSpace: "y"}[type(obj)]
    return {"kind": obj.kind, "coords": [float(c) for c in getattr(obj, coords)]}


def from_json(data, *, tol=TOL_OBJ):
    """Decode an object written by :func:`to_json`.

    Raises :class:`KeyError` or :class:`TypeError` on malformed input and a
    :class:`~biffobear_hyperboloid.errors.GeometryError` when the coordinates
    violate the object's invariant.
    """
    kind = data["kind"]
    if kind == Geodesic.kind:
        return Geodesic(HPoint(data["point"], tol=tol), data["tangent"], tol=tol)
    try:
        cls = _KINDS[kind]
    except KeyError as error:
        raise KeyError(
            "Select a kind from %s" % ", ".join(sorted(_KINDS) + [Geodesic.kind])
        ) from error
    return cls(data["coords"], tol=tol)

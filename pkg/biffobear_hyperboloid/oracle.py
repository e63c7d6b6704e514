# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT
"""
`biffobear_hyperboloid.oracle`
================================================================================

Brute-force numerics that certify the closed forms: a refining grid search
in two variables, central finite differences, minimum distances over sampled
points, and seeded generators of random valid instances.

Nothing here shares code paths with the closed forms it audits beyond the
basic objects.

Implementation Notes
--------------------

Instance seeds come from a 64-bit xorshift* stream::

    x ^= x >> 12
    x ^= x << 25
    x ^= x >> 27
    out = x * 0x2545F4914F6CDD1D mod 2^64

one output per instance index, each fed to :func:`numpy.random.default_rng`.
"""

import logging
from collections import namedtuple

import numpy as np

from biffobear_hyperboloid import errors, lorentz, tetra
from biffobear_hyperboloid.objects import (
    HalfSpace,
    Horoball,
    HPoint,
    exp_map,
    horosphere_chart,
    normalize_point,
)
from biffobear_hyperboloid.pairings import sdist_point_horosphere

logger = logging.getLogger(__name__)

MAX_EVALUATIONS = 10**7
GRID_POINTS = 101
DEFAULT_RADIUS = 5.0
FALLBACK_RADIUS = 10.0

_MASK = (1 << 64) - 1
_MULTIPLIER = 0x2545F4914F6CDD1D
# Replaces a zero seed, which is a fixed point of xorshift
_NONZERO_STATE = 0x9E3779B97F4A7C15

_TETRAHEDRON = np.array(
    [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]]
) / np.sqrt(3.0)

MinimizeReport = namedtuple(
    "MinimizeReport", ["argmin", "value", "grid_step_final", "evaluations"]
)


def instance_seeds(seed, count):
    """list: ``count`` 64-bit seeds derived from ``seed`` by xorshift64*."""
    state = (int(seed) & _MASK) or _NONZERO_STATE
    seeds = []
    for _ in range(count):
        state ^= state >> 12
        state ^= (state << 25) & _MASK
        state ^= state >> 27
        seeds.append((state * _MULTIPLIER) & _MASK)
    return seeds


def minimize_2d(
    f,
    center,
    radius,
    resolution,
    *,
    points=GRID_POINTS,
    max_evaluations=MAX_EVALUATIONS,
):
    """Minimize f over a square window by repeated grid refinement.

    Each stage evaluates f on a ``points`` x ``points`` grid, then shrinks the
    window tenfold around the best point so far, until the grid step is at
    most ``resolution``.

    :param f: called with two arrays of the same shape, returns an array.
    :param center: ``(s, t)`` centre of the first window.
    :param float radius: half-width of the first window.
    :param float resolution: largest acceptable final grid step.
    :return: MinimizeReport
    """
    if radius <= 0 or resolution <= 0:
        raise ValueError("Radius and resolution must be positive")
    if points < 3:
        raise ValueError("A grid needs at least 3 points per side")
    best_point = tuple(float(c) for c in center)
    best_value = np.inf
    evaluations = 0
    while True:
        evaluations += points * points
        if evaluations > max_evaluations:
            raise errors.BudgetExceeded(
                "Grid search needs more than %s evaluations" % max_evaluations
            )
        offsets = np.linspace(-radius, radius, points)
        s, t = np.meshgrid(
            best_point[0] + offsets, best_point[1] + offsets, indexing="ij"
        )
        values = np.asarray(f(s, t), dtype=float)
        index = np.unravel_index(np.nanargmin(values), values.shape)
        if values[index] < best_value:
            best_value = float(values[index])
            best_point = (float(s[index]), float(t[index]))
        step = 2.0 * radius / (points - 1)
        logger.debug(
            "Grid stage step=%r best=%r at %s", step, best_value, best_point
        )
        if step <= resolution:
            return MinimizeReport(best_point, best_value, step, evaluations)
        radius /= 10.0


def fd_gradient(f, point, h=1e-6):
    """Central-difference gradient ``(df/ds, df/dt)`` with relative step h."""
    if h <= 0:
        raise ValueError("Step must be positive")
    s, t = (float(c) for c in point)
    h_s = h * max(1.0, abs(s))
    h_t = h * max(1.0, abs(t))
    return (
        float((f(s + h_s, t) - f(s - h_s, t)) / (2.0 * h_s)),
        float((f(s, t + h_t) - f(s, t - h_t)) / (2.0 * h_t)),
    )


def sample_min_distance(object_sampler, target, count, *, include=()):
    """float: Smallest ``target(q)`` over sampled points q.

    :param object_sampler: callable returning ``count`` points of the source
        object.
    :param target: callable giving the distance from a point to the target.
    :param include: extra points always measured, such as a known foot.
    """
    samples = list(include) + list(object_sampler(count))
    return float(min(target(q) for q in samples))


def _tangent_basis(*vectors):
    """Vectors Lorentz-orthogonal to every one of ``vectors``."""
    dim = len(vectors[0])
    rows = np.array([lorentz.minkowski(dim) @ vec for vec in vectors])
    _, _, vh = np.linalg.svd(rows)
    return vh[len(vectors) :]


def horosphere_sampler(b, rng, *, spread=3.0):
    """Sampler of points on the horosphere of b, Gaussian in flat coordinates."""
    base = sdist_point_horosphere(HPoint(_origin(b.dim)), b).foot
    basis = _tangent_basis(base.v, b.x)

    def sample(count):
        weights = rng.normal(scale=spread, size=(count, basis.shape[0]))
        return [horosphere_chart(b, base, w @ basis) for w in weights]

    return sample


def plane_sampler(h, rng, *, spread=3.0):
    """Sampler of points on the polar plane of h."""
    origin = _origin(h.dim)
    base = normalize_point(origin - lorentz.ldot(origin, h.y) * h.y)
    basis = _tangent_basis(base.v, h.y)

    def sample(count):
        weights = rng.normal(scale=spread, size=(count, basis.shape[0]))
        return [exp_map(base, w @ basis) for w in weights]

    return sample


def point_sampler(p):
    """Sampler that always returns the point p."""

    def sample(count):
        return [p] * count

    return sample


def _origin(n):
    origin = np.zeros(n + 1)
    origin[0] = 1.0
    return origin


def _unit_direction(n, rng):
    direction = rng.normal(size=n)
    return direction / np.linalg.norm(direction)


def _spatial_rotation(n, rng):
    q, r = np.linalg.qr(rng.normal(size=(n, n)))
    matrix = np.eye(n + 1)
    matrix[1:, 1:] = q * np.sign(np.diag(r))
    return matrix


def random_isometry(n, rng, *, max_rapidity=2.0):
    """numpy.ndarray: A random element of O+(1, n), rotation-boost-rotation."""
    rapidity = rng.uniform(-max_rapidity, max_rapidity)
    return (
        _spatial_rotation(n, rng)
        @ lorentz.boost(n, 1, rapidity)
        @ _spatial_rotation(n, rng)
    )


def random_light_like(n, rng, *, log_scale=1.0):
    """numpy.ndarray: A positive light-like vector with random direction."""
    scale = np.exp(rng.uniform(-log_scale, log_scale))
    return scale * np.concatenate(([1.0], _unit_direction(n, rng)))


def random_point(n, rng, *, radius=2.0):
    """HPoint: A point within ``radius`` of the origin."""
    dist = rng.uniform(0.0, radius)
    direction = _unit_direction(n, rng)
    return HPoint(np.concatenate(([np.cosh(dist)], np.sinh(dist) * direction)))


def random_quad_instance(rng, *, log_scale=1.0, min_gap=0.05):
    """Random ``(x0, x1, y)`` with both ideal vertices inside the half-space.

    The plane starts as ``y = (0, 0, 1)`` with ideal vertices at angles in
    ``(-pi, 0)``, then everything is moved by a random isometry.
    """
    while True:
        angles = rng.uniform(-np.pi, 0.0, size=2)
        if abs(angles[0] - angles[1]) >= min_gap and np.all(
            np.sin(angles) < -min_gap
        ):
            break
    scales = np.exp(rng.uniform(-log_scale, log_scale, size=2))
    motion = random_isometry(2, rng)
    x0, x1 = (
        motion @ (scale * np.array([1.0, np.cos(phi), np.sin(phi)]))
        for scale, phi in zip(scales, angles)
    )
    y = motion @ np.array([0.0, 0.0, 1.0])
    return Horoball(x0), Horoball(x1), HalfSpace(y)


def random_pent_instance(rng, *, log_scale=1.0, d_range=(0.2, 3.0)):
    """Random ``(x, y0, y1)`` with facing ultraparallel legs.

    ``y0 = (sinh(d/2), -cosh(d/2), 0)``, ``y1 = (sinh(d/2), cosh(d/2), 0)``
    and ``x = lam (1, cos(phi), sin(phi))`` with ``|cos(phi)| < tanh(d/2)``,
    moved by a random isometry.
    """
    d = rng.uniform(*d_range)
    half = d / 2.0
    cos = 0.95 * np.tanh(half) * rng.uniform(-1.0, 1.0)
    sin = np.sqrt(1.0 - cos**2) * rng.choice([-1.0, 1.0])
    scale = np.exp(rng.uniform(-log_scale, log_scale))
    motion = random_isometry(2, rng)
    x = motion @ (scale * np.array([1.0, cos, sin]))
    y0 = motion @ np.array([np.sinh(half), -np.cosh(half), 0.0])
    y1 = motion @ np.array([np.sinh(half), np.cosh(half), 0.0])
    return Horoball(x), HalfSpace(y0), HalfSpace(y1)


def random_edge_lengths(
    rng, *, lengths=(0.1, 5.0), offsets=(0.7, 2.5), noise=0.25, attempts=10000
):
    """numpy.ndarray: The L matrix of a random truncated tetrahedron.

    Plane i sits at distance ``r_i`` from the origin with unit normal
    direction ``n_i``, so ``y_i = (sinh(r_i), cosh(r_i) n_i)``. The directions
    are perturbed vertices of a regular tetrahedron. Draws are rejected until
    every plane distance lies in ``lengths``.
    """
    low, high = np.cosh(lengths[0]), np.cosh(lengths[1])
    for attempt in range(attempts):
        offset = rng.uniform(*offsets, size=4)
        directions = _TETRAHEDRON + rng.normal(scale=noise, size=(4, 3))
        directions /= np.linalg.norm(directions, axis=1)[:, np.newaxis]
        normals = [
            HalfSpace(np.concatenate(([np.sinh(r)], np.cosh(r) * n)))
            for r, n in zip(offset, directions)
        ]
        try:
            matrix = tetra.tetra_from_normals(*normals).L
        except errors.GeometryError as error:
            logger.debug("Rejected normals (%s)", error)
            continue
        upper = matrix[np.triu_indices(4, 1)]
        if np.all((upper >= low) & (upper <= high)):
            logger.debug("Accepted edge lengths after %s rejections", attempt)
            return np.array(matrix)
    raise errors.BudgetExceeded(
        "No truncated tetrahedron with the requested lengths in %s attempts"
        % attempts
    )

# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT
"""
`biffobear_hyperboloid.lorentz`
================================================================================

Lorentzian linear algebra on R^(n+1): the inner product of signature (1, n),
causal classification, Gram matrices, their signature and their realization
by vector configurations.

Vectors are plain :class:`numpy.ndarray` values of shape ``(n + 1,)``. The
first coordinate is the time coordinate, so

    x o y = -x[0] * y[0] + x[1] * y[1] + ... + x[n] * y[n]

Implementation Notes
--------------------

* Eigen-decompositions use :func:`numpy.linalg.eigh`, eigenvalues ordered by
  descending value.
* Isometries of the hyperboloid are matrices in O+(1, n) acting on column
  vectors. :func:`boost` and :func:`rotation` generate them.
"""

import logging
from collections import namedtuple
from enum import Enum

import numpy as np

from biffobear_hyperboloid import errors

logger = logging.getLogger(__name__)

TOL_CLASS = 1e-10
TOL_SIGNATURE = 1e-10
TOL_REALIZE = 1e-9

CausalClass = namedtuple("CausalClass", ["kind", "positive"])
Signature = namedtuple("Signature", ["n_neg", "n_zero", "n_pos"])


class CausalKind(Enum):
    """Causal character of a vector, by the sign of its self-pairing."""

    SPACE_LIKE = "space-like"
    LIGHT_LIKE = "light-like"
    TIME_LIKE = "time-like"


def as_lvec(coords, *, min_dim=2):
    """Validate coordinates and return them as a read-only float vector."""
    try:
        vec = np.array(coords, dtype=float)
    except (TypeError, ValueError) as error:
        raise errors.GeometryError("Coordinates must be real numbers") from error
    if vec.ndim != 1 or vec.shape[0] < min_dim:
        raise errors.DimensionMismatch(
            "Expected a flat vector with at least %s coordinates, got shape %s"
            % (min_dim, vec.shape)
        )
    if not np.all(np.isfinite(vec)):
        raise errors.NonFiniteVector("Coordinates must be finite: %s" % vec)
    vec.setflags(write=False)
    return vec


def minkowski(dim):
    """The diagonal matrix of the Lorentzian form on R^dim."""
    metric = np.eye(dim)
    metric[0, 0] = -1.0
    return metric


def _check_same_dim(a, b):
    if np.shape(a) != np.shape(b):
        raise errors.DimensionMismatch(
            "Dimension mismatch: %s vs %s" % (np.shape(a), np.shape(b))
        )


def ldot(a, b):
    """float: The Lorentzian inner product a o b."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    _check_same_dim(a, b)
    return float(np.dot(a[1:], b[1:]) - a[0] * b[0])


def norm_squared(a):
    """float: The Lorentzian self-pairing a o a."""
    return ldot(a, a)


def classify(a, *, tol=TOL_CLASS):
    """Classify a vector as space-, light- or time-like.

    The light-like band is ``|a o a| <= tol * max(1, |a|^2)`` with ``|a|`` the
    Euclidean norm. ``positive`` is ``None`` for space-like vectors.
    """
    a = as_lvec(a)
    self_pairing = norm_squared(a)
    band = tol * max(1.0, float(np.dot(a, a)))
    if abs(self_pairing) <= band:
        kind = CausalKind.LIGHT_LIKE
    elif self_pairing > 0:
        return CausalClass(CausalKind.SPACE_LIKE, None)
    else:
        kind = CausalKind.TIME_LIKE
    return CausalClass(kind, bool(a[0] > 0))


def cauchy_schwarz_gap(x, y):
    """float: How far x o y sits below -sqrt((x o x)(y o y)).

    For positive vectors with non-positive self-pairing the gap is
    non-negative, and zero exactly when the vectors are dependent.
    """
    xx, yy = norm_squared(x), norm_squared(y)
    return -np.sqrt(max(xx * yy, 0.0)) - ldot(x, y)


def gram(vectors):
    """numpy.ndarray: The matrix of pairwise Lorentzian products."""
    vectors = [np.asarray(v, dtype=float) for v in vectors]
    for vec in vectors[1:]:
        _check_same_dim(vectors[0], vec)
    stacked = np.vstack(vectors)
    return stacked @ minkowski(stacked.shape[1]) @ stacked.T


def _sorted_eigh(matrix):
    """Eigen-decomposition with eigenvalues in descending order."""
    values, vectors = np.linalg.eigh(matrix)
    order = np.argsort(-values, kind="stable")
    return values[order], vectors[:, order]


def _scale(values):
    largest = float(np.max(np.abs(values))) if values.size else 0.0
    return largest if largest > 0.0 else 1.0


def signature(matrix, *, tol=TOL_SIGNATURE):
    """Count negative, zero and positive eigenvalues of a symmetric matrix.

    Zero means within ``tol`` times the largest eigenvalue magnitude (or
    within ``tol`` when every eigenvalue is tiny).
    """
    values = np.linalg.eigvalsh(np.asarray(matrix, dtype=float))
    band = tol * _scale(values)
    n_neg = int(np.sum(values < -band))
    n_pos = int(np.sum(values > band))
    return Signature(n_neg, values.size - n_neg - n_pos, n_pos)


def realize_gram(matrix, n, *, strict=None, tol=TOL_SIGNATURE):
    """Find vectors of R^(n+1) whose Lorentzian Gram matrix is ``matrix``.

    The negative eigen-direction becomes the time coordinate; the remaining
    eigen-directions, scaled by the square roots of their eigenvalues, fill the
    space coordinates in descending order. The result is unique up to O(1, n).

    :param matrix: symmetric k x k matrix with k <= n + 1.
    :param int n: the dimension of hyperbolic space.
    :param bool strict: reject zero eigenvalues. Defaults to ``k == n + 1``.
    :return: list of k vectors.
    """
    matrix = np.asarray(matrix, dtype=float)
    k = matrix.shape[0]
    if matrix.shape != (k, k) or k > n + 1:
        raise errors.DimensionMismatch(
            "Cannot realize a %s matrix in R^%s" % (matrix.shape, n + 1)
        )
    if not np.allclose(matrix, matrix.T, rtol=0.0, atol=1e-12 * _scale(matrix)):
        raise errors.GeometryError("Gram matrix must be symmetric")
    if strict is None:
        strict = k == n + 1
    values, vectors = _sorted_eigh(matrix)
    band = tol * _scale(values)
    negative = values < -band
    if np.sum(negative) > 1:
        raise errors.SignatureError(
            "More than one negative eigenvalue: %s" % np.array2string(values)
        )
    if strict and np.any(np.abs(values) <= band):
        raise errors.SignatureError(
            "Zero eigenvalue in a full-rank realization: %s"
            % np.array2string(values)
        )
    coords = np.zeros((k, n + 1))
    spatial = [i for i in range(k) if not negative[i]]
    if negative.any():
        neg = int(np.flatnonzero(negative)[0])
        coords[:, 0] = vectors[:, neg] * np.sqrt(-values[neg])
    if len(spatial) > n:
        # Only the smallest non-negative directions can be dropped, and only if zero
        dropped = spatial[n:]
        if np.any(values[dropped] > band):
            raise errors.SignatureError(
                "Positive part has rank above %s: %s" % (n, np.array2string(values))
            )
        spatial = spatial[:n]
    for column, index in enumerate(spatial, start=1):
        coords[:, column] = vectors[:, index] * np.sqrt(max(values[index], 0.0))
    logger.debug("Realized %sx%s Gram matrix, eigenvalues %s", k, k, values)
    return [as_lvec(row, min_dim=2) for row in coords]


def boost(n, axis, rapidity):
    """numpy.ndarray: Lorentz boost of R^(n+1) mixing time with ``axis``."""
    matrix = np.eye(n + 1)
    cosh, sinh = np.cosh(rapidity), np.sinh(rapidity)
    matrix[0, 0] = matrix[axis, axis] = cosh
    matrix[0, axis] = matrix[axis, 0] = sinh
    return matrix


def rotation(n, i, j, angle):
    """numpy.ndarray: Rotation of R^(n+1) in the space plane of axes i and j."""
    matrix = np.eye(n + 1)
    cos, sin = np.cos(angle), np.sin(angle)
    matrix[i, i] = matrix[j, j] = cos
    matrix[i, j] = -sin
    matrix[j, i] = sin
    return matrix


def is_isometry(matrix, *, tol=1e-9):
    """bool: True if ``matrix`` preserves the form and the time direction."""
    matrix = np.asarray(matrix, dtype=float)
    metric = minkowski(matrix.shape[0])
    residual = np.max(np.abs(matrix.T @ metric @ matrix - metric))
    return bool(residual <= tol * max(1.0, np.max(np.abs(matrix)) ** 2)) and bool(
        matrix[0, 0] > 0
    )

# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT
"""
`biffobear_hyperboloid.errors`
================================================================================

Exceptions raised when a vector, object or configuration does not satisfy the
preconditions of an operation. All precondition failures derive from
:class:`GeometryError`, itself a :class:`ValueError`.
"""


class GeometryError(ValueError):
    """Input violates a geometric precondition."""


class DimensionMismatch(GeometryError):
    """Vectors do not live in the same ambient space."""


class NonFiniteVector(GeometryError):
    """A coordinate is NaN or infinite."""


class SignatureError(GeometryError):
    """A Gram matrix has the wrong Lorentzian signature."""


class NotTimeLike(GeometryError):
    """Expected a time-like vector."""


class NotPositive(GeometryError):
    """Expected a vector with positive first coordinate."""


class NotLightLike(GeometryError):
    """Expected a light-like vector."""


class NotSpaceLike(GeometryError):
    """Expected a unit space-like vector."""


class NotTangent(GeometryError):
    """Vector is not tangent where it should be."""


class NotOnHorosphere(GeometryError):
    """Point does not lie on the horosphere."""


class DependentIdealPoints(GeometryError):
    """Two light-like vectors determine the same ideal point."""


class IdealPointNotInterior(GeometryError):
    """Ideal point is on or beyond the ideal boundary of a half-space."""


class DependentNormals(GeometryError):
    """Two normals determine the same hyperplane."""


class NotUltraparallel(GeometryError):
    """Hyperplanes intersect or are parallel."""


class WrongSide(GeometryError):
    """An ideal vertex lies on the wrong side of a side line."""


class OrientationError(GeometryError):
    """Normals are not oppositely oriented."""


class NotRealizable(GeometryError):
    """Scalar data do not close up into a polygon."""


class InconsistentInputs(GeometryError):
    """Redundant inputs disagree beyond tolerance."""


class InconsistentOrientation(GeometryError):
    """No choice of signs puts the normals in standard position."""


class DegenerateComplement(GeometryError):
    """Lorentz-orthogonal complement is not space-like."""


class DegenerateTetrahedron(GeometryError):
    """Operation needs a non-degenerate truncated tetrahedron."""


class IllConditioned(GeometryError):
    """The critical-point quadratic has collapsed."""


class DomainError(GeometryError):
    """Scalar argument outside the domain of a closed form."""


class BudgetExceeded(RuntimeError):
    """A search ran past its evaluation cap."""

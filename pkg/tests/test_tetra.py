# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT

# Many Pylnt conventions are broken for the sake of test readability
# Others fail because Pylint doesn't understand Pytest.
# Therefore skip this file.
# pylint: skip-file

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biffobear_hyperboloid import errors, lorentz, objects, oracle, pairings, tetra

COSH_1 = np.cosh(1.0)


def regular_lengths(cosh_length=COSH_1):
    matrix = np.full((4, 4), cosh_length)
    np.fill_diagonal(matrix, 1.0)
    return matrix


def octagon_normals(offset=1.5):
    # Four planes perpendicular to z = 0, around a right-angled octagon
    normals = []
    for index in range(4):
        phi = index * np.pi / 2.0
        direction = np.array([np.cos(phi), np.sin(phi), 0.0])
        normals.append(
            objects.HalfSpace(
                np.concatenate(([np.sinh(offset)], np.cosh(offset) * direction))
            )
        )
    return normals


def cross_lengths(matrix, pair, other):
    (i, j), (k, l) = pair, other
    return matrix[i, k], matrix[i, l], matrix[j, k], matrix[j, l]


@pytest.fixture
def regular():
    return tetra.tetra_from_edge_lengths(regular_lengths())


@pytest.fixture
def octagon():
    return tetra.tetra_from_normals(*octagon_normals())


seeds = st.integers(min_value=0, max_value=2**32)


def test_regular_tetrahedron_realizes_its_lengths(regular):
    vectors = [h.y for h in regular.normals]
    assert np.allclose(lorentz.gram(vectors), 2.0 * np.eye(4) - regular_lengths())
    assert np.array_equal(regular.L, regular_lengths())


def test_lengths_are_read_only(regular):
    with pytest.raises(ValueError):
        regular.L[0, 1] = 2.0


def test_opposite():
    assert tetra.opposite(0, 1) == (2, 3)
    assert tetra.opposite(3, 1) == (0, 2)
    with pytest.raises(ValueError):
        tetra.opposite(2, 2)


def test_internal_edge_joins_the_two_planes(regular):
    foot_0, foot_1, length = tetra.internal_edge(regular, 0, 1)
    assert length == pytest.approx(1.0)
    assert objects.on_polar_plane(regular.normals[0], foot_0)
    assert objects.on_polar_plane(regular.normals[1], foot_1)
    line = tetra.edge_geodesic(regular, 0, 1)
    assert np.allclose(line.at(length), foot_1.v)


def test_regular_transversal(regular):
    found = tetra.transversal(regular, (0, 1), (2, 3))
    assert found.s0 == pytest.approx(0.5)
    assert found.t0 == pytest.approx(0.5)
    assert found.cosh_T == pytest.approx(2.0 * COSH_1 / (COSH_1 - 1.0), rel=1e-12)
    assert found.T == pytest.approx(np.arccosh(found.cosh_T))
    assert not found.degenerate
    assert found.within_edges
    start, end = found.endpoints
    assert start.dim == 3
    assert np.cosh(pairings.dist_point_point(start, end)) == pytest.approx(
        found.cosh_T
    )


def test_regular_transversal_meets_the_bound():
    lengths = [COSH_1] * 6
    expected = 2.0 * COSH_1 / (COSH_1 - 1.0)
    assert tetra.transversal_length(*lengths) == pytest.approx(expected, rel=1e-10)
    assert tetra.transversal_bound(COSH_1, COSH_1, COSH_1) == pytest.approx(
        expected, rel=1e-10
    )


@pytest.mark.parametrize("x, y", [(1.0, 2.0), (2.0, 0.5)])
def test_transversal_length_and_bound_need_proper_edges(x, y):
    with pytest.raises(errors.DomainError):
        tetra.transversal_length(x, y, 2.0, 2.0, 2.0, 2.0)
    with pytest.raises(errors.DomainError):
        tetra.transversal_bound(x, y, 2.0)


def test_transversal_length_rejects_impossible_edges():
    # Equal cross lengths with 2L < sqrt((x - 1)(y - 1)) give no tetrahedron
    with pytest.raises(errors.NotRealizable):
        tetra.transversal_length(3.24, 26.29, 1.09, 1.09, 1.09, 1.09)


@pytest.mark.parametrize("L", [1.0, 0.5])
def test_transversal_bound_needs_cross_lengths_above_1(L):
    with pytest.raises(errors.DomainError):
        tetra.transversal_bound(2.0, 2.0, L)


def test_transversal_quadratic_roots(regular):
    quad = tetra.transversal_quadratic(regular, (0, 1), (2, 3))
    assert quad.a < 0
    assert quad.b + 2.0 * quad.a > 0
    assert quad.smaller * quad.larger == pytest.approx(1.0)
    assert quad.smaller == pytest.approx(np.tanh(0.5))


def test_edge_pairings_from_matrix_and_solid_agree(regular):
    assert tetra.edge_pairings(regular, (0, 1), (2, 3)) == tetra.edge_pairings(
        regular_lengths(), (0, 1), (2, 3)
    )
    with pytest.raises(ValueError):
        tetra.edge_pairings(regular, (0, 1), (1, 3))


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_factored_and_pairing_forms_agree(seed):
    rng = np.random.default_rng(seed)
    solid = tetra.tetra_from_edge_lengths(oracle.random_edge_lengths(rng))
    s, t = np.meshgrid(np.linspace(-1, 3, 9), np.linspace(-1, 3, 9))
    for pair, other in tetra.TRANSVERSAL_PAIRS:
        direct = tetra.distance_function(solid, pair, other, s, t)
        factored = tetra.factored_distance(solid, pair, other, s, t)
        assert np.allclose(direct, factored, rtol=1e-10, atol=0.0)


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_transversal_is_the_minimum_and_above_the_bound(seed):
    rng = np.random.default_rng(seed)
    solid = tetra.tetra_from_edge_lengths(oracle.random_edge_lengths(rng))
    for pair, other in tetra.TRANSVERSAL_PAIRS:
        found = tetra.transversal(solid, pair, other)
        s, t = np.meshgrid(
            found.s0 + np.linspace(-2, 2, 41), found.t0 + np.linspace(-2, 2, 41)
        )
        grid = tetra.distance_function(solid, pair, other, s, t)
        assert grid.min() >= found.cosh_T * (1.0 - 1e-12)
        x, y = solid.L[pair], solid.L[other]
        cross = cross_lengths(solid.L, pair, other)
        bound = tetra.transversal_bound(x, y, min(cross))
        assert found.cosh_T >= bound * (1.0 - 1e-9)
        assert tetra.transversal_length(x, y, *cross) == pytest.approx(
            found.cosh_T, rel=1e-12
        )


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_klein_relabelings_keep_the_transversal(seed):
    rng = np.random.default_rng(seed)
    solid = tetra.tetra_from_edge_lengths(oracle.random_edge_lengths(rng))
    reference = tetra.transversal(solid, (0, 1), (2, 3)).cosh_T
    for order in ((2, 3, 0, 1), (1, 0, 3, 2), (3, 2, 1, 0)):
        moved = tetra.relabel(solid, order)
        found = tetra.transversal(moved, (0, 1), (2, 3)).cosh_T
        assert found == pytest.approx(reference, rel=1e-9)


def test_relabel_rejects_non_permutations(regular):
    with pytest.raises(ValueError):
        tetra.relabel(regular, (0, 0, 1, 2))


def test_regular_tetrahedron_is_not_degenerate(regular):
    assert not tetra.is_degenerate(regular)
    for i in range(4):
        z, orthogonal = tetra.hat_plane(regular, i)
        assert not orthogonal
        for j in range(4):
            if j != i:
                assert lorentz.ldot(z.y, regular.normals[j].y) == pytest.approx(
                    0.0, abs=1e-12
                )
    for i, j in itertools.combinations(range(4), 2):
        _, _, length = tetra.internal_edge(regular, i, j)
        line = tetra.edge_geodesic(regular, i, j)
        midpoint = objects.geodesic_eval(line, length / 2)
        assert tetra.member(regular, midpoint)


def _crossing(point, normal, overshoot=0.1):
    # Walk from point along the perpendicular to the plane of normal, past it
    k = lorentz.ldot(point.v, normal)
    tangent = (normal + k * point.v) / np.sqrt(1.0 + k**2)
    t = np.arcsinh(-k) + overshoot
    return objects.HPoint(np.cosh(t) * point.v + np.sinh(t) * tangent)


@pytest.mark.parametrize(
    "boundary",
    [
        lambda solid: solid.normals[0].y,
        lambda solid: tetra.hat_plane(solid, 0)[0].y,
    ],
    ids=["beyond P_0", "beyond hat plane 0"],
)
def test_member_rejects_points_past_a_face(regular, boundary):
    _, _, length = tetra.internal_edge(regular, 2, 3)
    inside = objects.geodesic_eval(tetra.edge_geodesic(regular, 2, 3), length / 2)
    assert tetra.member(regular, inside)
    normal = boundary(regular)
    outside = _crossing(inside, normal)
    assert lorentz.ldot(outside.v, normal) > 0.05
    assert not tetra.member(regular, outside)


def test_member_accepts_the_feet_of_internal_edges(regular):
    for i, j in itertools.combinations(range(4), 2):
        foot_i, foot_j, _ = tetra.internal_edge(regular, i, j)
        assert tetra.member(regular, foot_i)
        assert tetra.member(regular, foot_j)


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(min_value=0, max_value=3))
def test_transversal_grows_with_every_cross_edge(seed, index):
    rng = np.random.default_rng(seed)
    matrix = oracle.random_edge_lengths(rng)
    x, y = matrix[0, 1], matrix[2, 3]
    cross = list(cross_lengths(matrix, (0, 1), (2, 3)))
    base = tetra.transversal_length(x, y, *cross)
    cross[index] += 0.01
    raised = tetra.transversal_length(x, y, *cross)
    assert np.arccosh(raised) - np.arccosh(base) > 1e-12


@pytest.mark.parametrize("index", range(4))
def test_regular_transversal_grows_with_every_cross_edge(index):
    cross = [COSH_1] * 4
    cross[index] += 0.01
    raised = tetra.transversal_length(COSH_1, COSH_1, *cross)
    assert raised > tetra.transversal_length(COSH_1, COSH_1, *[COSH_1] * 4)


def test_octagon_tetrahedron_is_degenerate(octagon):
    assert tetra.is_degenerate(octagon)
    found = tetra.transversal(octagon, (0, 2), (1, 3))
    assert found.cosh_T == pytest.approx(1.0, abs=1e-10)
    assert found.degenerate
    assert found.T == 0.0
    with pytest.raises(errors.DegenerateTetrahedron):
        tetra.member(octagon, tetra.internal_edge(octagon, 0, 1)[0])


def test_tetra_from_normals_checks_its_planes():
    normals = octagon_normals()
    with pytest.raises(errors.DimensionMismatch):
        tetra.tetra_from_normals(*normals[:3])
    with pytest.raises(errors.DimensionMismatch):
        tetra.tetra_from_normals(*[objects.HalfSpace([0.0, 1.0, 0.0])] * 4)
    crossing = objects.HalfSpace([0.0, 0.0, 0.0, 1.0])
    with pytest.raises(errors.NotUltraparallel):
        tetra.tetra_from_normals(crossing, *normals[1:])


def test_tetra_from_normals_fixes_signs():
    normals = octagon_normals()
    solid = tetra.tetra_from_normals(normals[0], normals[1].flipped(), *normals[2:])
    assert np.all(solid.L >= 1.0)


@pytest.mark.parametrize(
    "matrix, error",
    [
        (np.eye(3), errors.DimensionMismatch),
        (regular_lengths() + np.triu(np.ones((4, 4)), 1), errors.GeometryError),
        (regular_lengths() + np.eye(4), errors.GeometryError),
        (regular_lengths(1.0), errors.NotUltraparallel),
        (np.where(np.eye(4) > 0, 1.0, np.nan), errors.NonFiniteVector),
    ],
)
def test_tetra_from_edge_lengths_rejects_bad_matrices(matrix, error):
    with pytest.raises(error):
        tetra.tetra_from_edge_lengths(matrix)


def test_tetra_from_edge_lengths_rejects_the_wrong_signature():
    matrix = np.full((4, 4), 1.1)
    matrix[0, 1] = matrix[1, 0] = matrix[2, 3] = matrix[3, 2] = 10.0
    np.fill_diagonal(matrix, 1.0)
    with pytest.raises(errors.SignatureError):
        tetra.tetra_from_edge_lengths(matrix)


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_isometries_keep_lengths_and_transversals(seed):
    rng = np.random.default_rng(seed)
    solid = tetra.tetra_from_edge_lengths(oracle.random_edge_lengths(rng))
    motion = oracle.random_isometry(3, rng)
    moved = tetra.tetra_from_normals(
        *(objects.HalfSpace(motion @ h.y) for h in solid.normals)
    )
    assert np.allclose(moved.L, solid.L, rtol=1e-9, atol=0.0)
    for pair, other in tetra.TRANSVERSAL_PAIRS:
        assert tetra.transversal(moved, pair, other).cosh_T == pytest.approx(
            tetra.transversal(solid, pair, other).cosh_T, rel=1e-9
        )

# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT

# Many Pylnt conventions are broken for the sake of test readability
# Others fail because Pylint doesn't understand Pytest.
# Therefore skip this file.
# pylint: skip-file

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biffobear_hyperboloid import errors, lorentz, objects, oracle, pairings

lengths = st.floats(min_value=-4, max_value=4)


@pytest.fixture
def origin():
    return objects.HPoint([1.0, 0.0, 0.0])


def point_at(dist, angle=0.0):
    return objects.HPoint(
        [np.cosh(dist), np.sinh(dist) * np.cos(angle), np.sinh(dist) * np.sin(angle)]
    )


def leg_planes(d):
    # Two facing half-spaces at distance d, symmetric about the vertical axis
    half = d / 2.0
    return (
        objects.HalfSpace([np.sinh(half), -np.cosh(half), 0.0]),
        objects.HalfSpace([np.sinh(half), np.cosh(half), 0.0]),
    )


def test_dist_point_point(origin):
    assert pairings.dist_point_point(origin, origin) == 0.0
    assert pairings.dist_point_point(origin, point_at(2.0)) == pytest.approx(2.0)
    assert pairings.dist_point_point(point_at(1.0), point_at(1.0, np.pi)) == (
        pytest.approx(2.0)
    )


def test_dist_point_point_keeps_precision_for_close_points(origin):
    assert pairings.dist_point_point(origin, point_at(1e-9)) == pytest.approx(
        1e-9, rel=1e-6
    )


@given(lengths)
def test_point_horosphere_distance_follows_scale(log_scale):
    b = objects.Horoball(np.exp(log_scale) * np.array([1.0, 1.0, 0.0]))
    found = pairings.sdist_point_horosphere(objects.HPoint([1.0, 0.0, 0.0]), b)
    assert found.distance.convention == "point-horosphere"
    assert found.distance.value == pytest.approx(log_scale, abs=1e-12)
    assert objects.on_horosphere(b, found.foot)
    assert np.allclose(found.witness.at(found.distance.value), found.foot.v)


def test_point_inside_horoball_has_negative_distance():
    b = objects.Horoball([1.0, 1.0, 0.0])
    found = pairings.sdist_point_horosphere(point_at(1.0), b)
    assert found.distance.value == pytest.approx(-1.0)


def test_horosphere_horosphere_distance_and_feet():
    b0 = objects.Horoball(np.exp(3.0) * np.array([1.0, 1.0, 0.0]))
    b1 = objects.Horoball([1.0, -1.0, 0.0])
    found = pairings.sdist_horosphere_horosphere(b0, b1)
    assert found.distance.value == pytest.approx(3.0)
    assert objects.on_horosphere(b0, found.feet[0])
    assert objects.on_horosphere(b1, found.feet[1])
    assert pairings.dist_point_point(*found.feet) == pytest.approx(3.0)


def test_overlapping_horoballs_have_negative_distance():
    b0 = objects.Horoball([np.sqrt(2), 1.0, -1.0])
    b1 = objects.Horoball(np.exp(-1.0) * np.array([np.sqrt(2), -1.0, -1.0]))
    found = pairings.sdist_horosphere_horosphere(b0, b1)
    assert found.distance.value == pytest.approx(-1.0)


def test_horoballs_at_the_same_ideal_point_are_rejected():
    b0 = objects.Horoball([1.0, 1.0, 0.0])
    with pytest.raises(errors.DependentIdealPoints):
        pairings.sdist_horosphere_horosphere(b0, objects.Horoball([2.0, 2.0, 0.0]))


def test_point_plane_distance_is_signed(origin):
    h = objects.HalfSpace([0.0, 1.0, 0.0])
    assert pairings.sdist_point_plane(origin, h).value == 0.0
    assert pairings.sdist_point_plane(point_at(1.0), h).value == pytest.approx(1.0)
    assert pairings.sdist_point_plane(point_at(1.0, np.pi), h).value == (
        pytest.approx(-1.0)
    )


def test_plane_horosphere_distance():
    h = objects.HalfSpace([0.0, 0.0, 1.0])
    b = objects.Horoball(np.exp(1.5) * np.array([np.sqrt(2), 1.0, -1.0]))
    found = pairings.sdist_plane_horosphere(h, b)
    assert found.distance.value == pytest.approx(1.5)
    assert objects.on_polar_plane(h, found.foot)
    assert objects.on_horosphere(b, objects.geodesic_eval(found.witness, 1.5))


def test_plane_horosphere_needs_interior_ideal_point():
    h = objects.HalfSpace([0.0, 0.0, 1.0])
    with pytest.raises(errors.IdealPointNotInterior):
        pairings.sdist_plane_horosphere(h, objects.Horoball([1.0, 0.0, 1.0]))
    with pytest.raises(errors.IdealPointNotInterior):
        pairings.sdist_plane_horosphere(h, objects.Horoball([1.0, 1.0, 0.0]))


def test_plane_pair_trichotomy():
    x_axis = objects.HalfSpace([0.0, 1.0, 0.0])
    found = pairings.plane_pair_relation(x_axis, objects.HalfSpace([0.0, 0.0, 1.0]))
    assert found.variant is pairings.PlaneRelation.INTERSECTING
    assert found.eta == pytest.approx(np.pi / 2)

    found = pairings.plane_pair_relation(*leg_planes(1.0))
    assert found.variant is pairings.PlaneRelation.ULTRAPARALLEL
    assert found.eta == pytest.approx(1.0)
    assert found.opposed

    found = pairings.plane_pair_relation(x_axis, objects.HalfSpace([1.0, 1.0, 1.0]))
    assert found.variant is pairings.PlaneRelation.PARALLEL
    assert found.eta is None


def test_plane_pair_rejects_the_same_plane():
    h = objects.HalfSpace([0.0, 1.0, 0.0])
    with pytest.raises(errors.DependentNormals):
        pairings.plane_pair_relation(h, h.flipped())


def test_perpendicular_feet_of_ultraparallel_planes():
    h0, h1 = leg_planes(2.0)
    v0, v1 = pairings.perp_foot_plane_plane(h0, h1)
    assert objects.on_polar_plane(h0, v0)
    assert objects.on_polar_plane(h1, v1)
    assert pairings.dist_point_point(v0, v1) == pytest.approx(2.0)


def test_perpendicular_feet_need_ultraparallel_planes():
    with pytest.raises(errors.NotUltraparallel):
        pairings.perp_foot_plane_plane(
            objects.HalfSpace([0.0, 1.0, 0.0]), objects.HalfSpace([0.0, 0.0, 1.0])
        )


def test_horocyclic_distance_needs_points_on_the_horosphere(origin):
    b = objects.Horoball([1.0, 1.0, 0.0])
    with pytest.raises(errors.NotOnHorosphere):
        pairings.horocyclic_distance(b, origin, point_at(1.0, np.pi / 2))


def test_tangent_angle():
    assert pairings.tangent_angle([0.0, 1.0, 0.0], [0.0, 0.0, 2.0]) == pytest.approx(
        np.pi / 2
    )
    assert pairings.tangent_angle([0.0, 1.0, 0.0], [0.0, -3.0, 0.0]) == pytest.approx(
        np.pi
    )


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_distances_are_invariant_under_isometries(seed):
    rng = np.random.default_rng(seed)
    motion = oracle.random_isometry(2, rng)
    p = oracle.random_point(2, rng)
    b = objects.Horoball(oracle.random_light_like(2, rng))
    before = pairings.sdist_point_horosphere(p, b).distance.value
    after = pairings.sdist_point_horosphere(
        objects.HPoint(motion @ p.v), objects.Horoball(motion @ b.x)
    ).distance.value
    assert after == pytest.approx(before, abs=1e-9)
    assert lorentz.is_isometry(motion)

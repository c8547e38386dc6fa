"""Shared fixtures: the worked fans and hypersurfaces used across the suite."""

import pytest

from toricdeform.fan import make_fan, star_subdivision
from toricdeform.ring import Polynomial, Scalar


def p2_fan():
    return make_fan(2, [(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (0, 2)])


def p4_fan():
    rays = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, -1, -1, -1)]
    cones = [tuple(sorted(set(range(5)) - {i})) for i in range(5)]
    return make_fan(4, rays, cones)


def wp11222_fan():
    rays = [(-1, -2, -2, -2), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    cones = [tuple(sorted(set(range(5)) - {i})) for i in range(5)]
    return make_fan(4, rays, cones)


def resolved_wp11222_fan():
    return star_subdivision(wp11222_fan(), (0, -1, -1, -1))


def resolved_wp11222_polynomial():
    # x1^8 x6^4 + x2^8 x6^4 + x3^4 + x4^4 + x5^4
    terms = [
        ((8, 0, 0, 0, 0, 4), 1),
        ((0, 8, 0, 0, 0, 4), 1),
        ((0, 0, 4, 0, 0, 0), 1),
        ((0, 0, 0, 4, 0, 0), 1),
        ((0, 0, 0, 0, 4, 0), 1),
    ]
    return Polynomial({e: Scalar.from_int(c) for e, c in terms}, 6)


def fermat_quintic():
    terms = {tuple(5 if j == i else 0 for j in range(5)): Scalar.from_int(1)
             for i in range(5)}
    return Polynomial(terms, 5)


def wp112_fan():
    return make_fan(2, [(1, 0), (0, 1), (-1, -2)], [(0, 1), (1, 2), (0, 2)])


def resolved_wp112_fan():
    return star_subdivision(wp112_fan(), (0, -1))


def resolved_wp112_polynomial():
    # anticanonical quartic-type curve: x1^4 x4^2 + x2^4 x4^2 + x3^2, checked
    # homogeneous in the tests
    terms = [
        ((4, 0, 0, 2), 1),
        ((0, 4, 0, 2), 1),
        ((0, 0, 2, 0), 1),
    ]
    return Polynomial({e: Scalar.from_int(c) for e, c in terms}, 4)


def wp1122_fan():
    rays = [(-1, -2, -2), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
    cones = [tuple(sorted(set(range(4)) - {i})) for i in range(4)]
    return make_fan(3, rays, cones)


def resolved_wp1122_fan():
    return star_subdivision(wp1122_fan(), (0, -1, -1))


def resolved_wp1122_polynomial():
    # x1^6 x5^3 + x2^6 x5^3 + x3^3 + x4^3
    terms = [
        ((6, 0, 0, 0, 3), 1),
        ((0, 6, 0, 0, 3), 1),
        ((0, 0, 3, 0, 0), 1),
        ((0, 0, 0, 3, 0), 1),
    ]
    return Polynomial({e: Scalar.from_int(c) for e, c in terms}, 5)


def dp_123_fan():
    # weighted projective plane with weights (1,2,3), fully resolved:
    # one 2-cone of the coarse fan has one interior ray, another has two
    rays = [(1, 0), (0, 1), (-2, -3), (-1, -1), (-1, -2), (0, -1)]
    cones = [(0, 1), (1, 3), (3, 2), (2, 4), (4, 5), (5, 0)]
    return make_fan(2, rays, cones)


@pytest.fixture
def p2():
    return p2_fan()


@pytest.fixture
def quintic_setup():
    return p4_fan(), fermat_quintic()


@pytest.fixture
def example_fan():
    return resolved_wp11222_fan()


@pytest.fixture
def example_setup():
    return resolved_wp11222_fan(), resolved_wp11222_polynomial()

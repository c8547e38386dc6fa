import random
from fractions import Fraction

import pytest

from toricdeform.polyhedra import (
    UnboundedPolytopeError,
    feasible,
    lattice_points,
    polytope_dim,
    vertices,
)


def test_unit_simplex():
    # m1 >= 0, m2 >= 0, m1 + m2 <= 1
    system = [((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)]
    pts = lattice_points(system, 2)
    assert pts == [(0, 0), (0, 1), (1, 0)]


def test_inconsistent_system_empty():
    system = [((1, 0), 1), ((-1, 0), 0)]
    assert lattice_points(system, 2) == []
    assert not feasible(system, 2)


def test_unbounded_error():
    system = [((1, 0), 0), ((0, 1), 0)]
    with pytest.raises(UnboundedPolytopeError):
        lattice_points(system, 2)


def brute_force_wp11222_degree8_count():
    # monomials a+b+2c+2d+2e = 8 with nonnegative exponents
    count = 0
    for c in range(5):
        for d in range(5):
            for e in range(5):
                s = c + d + e
                if 2 * s <= 8:
                    count += 8 - 2 * s + 1
    return count


def test_wp11222_degree8_polytope_count():
    # polytope of the degree-8 divisor on the weighted projective space,
    # cut out by the five ray inequalities with b = (1,1,1,1,1) shifts removed:
    # <m, e_i> >= -b_i with weights (1,1,2,2,2) <-> anticanonical of P(1,1,2,2,2)
    rays = [(-1, -2, -2, -2), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    system = [(r, -1) for r in rays]
    pts = lattice_points(system, 4)
    assert len(pts) == 105
    assert len(pts) == brute_force_wp11222_degree8_count()
    # lexicographic order
    assert pts == sorted(pts)


def test_lattice_points_match_box_enumeration():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(1, 3)
        # random bounded system: a box plus a couple of random cuts
        system = []
        for i in range(n):
            e = tuple(1 if j == i else 0 for j in range(n))
            me = tuple(-1 if j == i else 0 for j in range(n))
            system.append((e, -rng.randint(0, 4)))
            system.append((me, -rng.randint(0, 4)))
        for _ in range(rng.randint(0, 3)):
            system.append((tuple(rng.randint(-2, 2) for _ in range(n)), rng.randint(-4, 1)))
        pts = lattice_points(system, n)
        # brute-force oracle over the box
        box = []
        from itertools import product
        for cand in product(range(-5, 6), repeat=n):
            if all(sum(c * x for c, x in zip(coeffs, cand)) >= r for coeffs, r in system):
                box.append(cand)
        assert pts == box


def test_vertices_and_dim():
    square = [((1, 0), 0), ((0, 1), 0), ((-1, 0), -2), ((0, -1), -3)]
    vs = vertices(square, 2)
    assert vs == sorted([(Fraction(0), Fraction(0)), (Fraction(0), Fraction(3)),
                         (Fraction(2), Fraction(0)), (Fraction(2), Fraction(3))])
    assert polytope_dim(square, 2) == 2
    segment = [((1, 0), 0), ((-1, 0), 0), ((0, 1), 0), ((0, -1), -1)]
    assert polytope_dim(segment, 2) == 1
    point = [((1, 0), 0), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)]
    assert polytope_dim(point, 2) == 0
    empty = [((1, 0), 1), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)]
    assert polytope_dim(empty, 2) == -1

"""Exact predicates, general-position validation, hulls, order types."""

import random
from fractions import Fraction

import pytest

from kedges import (
    GeneralPositionError,
    Orientation,
    Point,
    PointSet,
    convex_hull,
    cross,
    hull_size,
    is_extreme,
    order_type,
    orientation,
    validate_general_position,
)
from helpers import brute_is_interior, convex_polygon, random_point_set


def test_orientation_signs():
    a, b = Point(0, 0), Point(4, 1)
    assert orientation(a, b, Point(1, 3)) == Orientation.CCW
    assert orientation(a, b, Point(1, -3)) == Orientation.CW
    assert orientation(a, b, Point(8, 2)) == Orientation.COLLINEAR


def test_orientation_symmetries():
    rng = random.Random(101)
    for _ in range(300):
        a, b, c = (
            Point(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(3)
        )
        o = orientation(a, b, c)
        assert o == orientation(b, c, a) == orientation(c, a, b)
        assert int(o) == -int(orientation(b, a, c))
        assert int(o) == (cross(a.x, a.y, b.x, b.y, c.x, c.y) > 0) - (
            cross(a.x, a.y, b.x, b.y, c.x, c.y) < 0
        )


def test_point_requires_integers():
    with pytest.raises(TypeError):
        Point(1.5, 2)
    with pytest.raises(TypeError):
        Point(1, Fraction(1, 2))


def test_validate_reports_collinear_triple():
    pts = [Point(0, 0), Point(5, 1), Point(2, 7), Point(10, 2)]
    assert validate_general_position(pts) == (0, 1, 3)
    assert validate_general_position(pts[:3]) is None


def test_pointset_rejects_bad_input():
    with pytest.raises(GeneralPositionError) as info:
        PointSet([(0, 0), (3, 1), (6, 2), (1, 5)])
    assert info.value.triple == (0, 1, 2)
    with pytest.raises(ValueError):
        PointSet([(0, 0), (1, 2), (0, 0)])


def test_pointset_immutable_and_indexable():
    S = PointSet([(0, 0), (4, 1), (2, 5)])
    assert len(S) == 3
    assert S[1] == Point(4, 1)
    assert list(S)[2] == Point(2, 5)
    with pytest.raises(AttributeError):
        S.points = ()


def test_pointset_clears_rational_coordinates():
    S = PointSet([(Fraction(1, 2), 0), (Fraction(3, 4), 1), (0, Fraction(1, 3))])
    # one uniform scale factor (the lcm 12 of the denominators)
    assert [(p.x, p.y) for p in S] == [(6, 0), (9, 12), (0, 4)]


def test_pointset_replace():
    S = PointSet([(0, 0), (4, 1), (2, 5)])
    T = S.replace(2, (Fraction(5, 2), 6))
    assert [(p.x, p.y) for p in T] == [(0, 0), (8, 2), (5, 12)]
    assert orientation(T[0], T[1], T[2]) == orientation(S[0], S[1], S[2])


def test_convex_hull_square_with_interior():
    S = PointSet([(0, 0), (10, 0), (10, 10), (0, 10), (3, 4), (7, 2)])
    hull = convex_hull(S)
    assert sorted(hull) == [0, 1, 2, 3]
    assert hull_size(S) == 4
    # counterclockwise: consecutive triples turn left
    h = len(hull)
    for i in range(h):
        a, b, c = hull[i], hull[(i + 1) % h], hull[(i + 2) % h]
        assert orientation(S[a], S[b], S[c]) == Orientation.CCW


def test_convex_hull_of_polygon_is_everything():
    for n in range(3, 10):
        S = convex_polygon(n)
        assert sorted(convex_hull(S)) == list(range(n))


def test_extreme_matches_brute_force():
    rng = random.Random(202)
    for _ in range(60):
        S = random_point_set(rng, rng.randint(4, 9))
        hull = set(convex_hull(S))
        for i in range(len(S)):
            assert is_extreme(S, i) == (i in hull)
            assert brute_is_interior(S, i) == (i not in hull)


def test_order_type_matches_orientation():
    rng = random.Random(303)
    for _ in range(40):
        S = random_point_set(rng, rng.randint(3, 8))
        ot = order_type(S)
        n = len(S)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if len({i, j, k}) == 3:
                        assert ot[(i, j, k)] == orientation(
                            S[i], S[j], S[k]
                        )


def test_order_type_mirror_flips_everything():
    S = PointSet([(0, 0), (5, 1), (2, 7), (9, 4)])
    M = PointSet([(-p.x, p.y) for p in S])
    d = order_type(S).diff(order_type(M))
    from math import comb

    assert len(d) == comb(4, 3)


def test_order_type_detects_single_flip():
    # moving one point across exactly one line flips exactly that triple
    S = PointSet([(0, 0), (10, 0), (0, 10), (4, 4)])
    T = PointSet([(0, 0), (10, 0), (0, 10), (6, 6)])
    d = order_type(S).diff(order_type(T))
    assert d == {(1, 2, 3)}

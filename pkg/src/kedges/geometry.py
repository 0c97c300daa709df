"""Exact primitives for planar point sets in general position.

Coordinates are Python integers, so every orientation determinant is
computed exactly (arbitrary precision, no overflow is possible).
Rational coordinates are accepted only at point-set construction time
and are cleared to integers by a uniform positive scaling, which
preserves every orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Optional, Sequence, Tuple


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class GeneralPositionError(ValueError):
    """Raised when three points of a set are collinear.

    The offending index triple is stored in ``triple``.
    """

    def __init__(self, triple: Tuple[int, int, int]):
        self.triple = triple
        super().__init__("collinear triple at indices %r" % (triple,))


@dataclass(frozen=True)
class Point:
    x: int
    y: int

    def __post_init__(self):
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise TypeError("coordinates must be int, got (%r, %r)" % (self.x, self.y))

    def __iter__(self):
        yield self.x
        yield self.y


def cross(ox: int, oy: int, ax: int, ay: int, bx: int, by: int) -> int:
    """Signed area determinant of the triangle (o, a, b), doubled."""
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    """Orientation of the ordered triple (a, b, c): CCW, CW or COLLINEAR."""
    d = cross(a.x, a.y, b.x, b.y, c.x, c.y)
    if d > 0:
        return Orientation.CCW
    if d < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def validate_general_position(points: Sequence[Point]) -> Optional[Tuple[int, int, int]]:
    """Return a witnessing collinear index triple, or None if the set is fine.

    Also rejects duplicate points (reported as a degenerate triple is not
    possible for a pair, so duplicates raise ValueError directly).
    """
    n = len(points)
    seen = {}
    for i, p in enumerate(points):
        key = (p.x, p.y)
        if key in seen:
            raise ValueError("duplicate point at indices (%d, %d)" % (seen[key], i))
        seen[key] = i
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orientation(points[i], points[j], points[k]) == Orientation.COLLINEAR:
                    return (i, j, k)
    return None


def _clear_denominators(coords) -> Tuple[Point, ...]:
    """Scale rational coordinates to integers by one uniform positive factor."""
    fracs = []
    for x, y in coords:
        fx = Fraction(x) if not isinstance(x, int) else Fraction(x, 1)
        fy = Fraction(y) if not isinstance(y, int) else Fraction(y, 1)
        fracs.append((fx, fy))
    scale = 1
    for fx, fy in fracs:
        scale = scale * fx.denominator // gcd(scale, fx.denominator)
        scale = scale * fy.denominator // gcd(scale, fy.denominator)
    return tuple(
        Point(int(fx * scale), int(fy * scale)) for fx, fy in fracs
    )


class PointSet:
    """An ordered planar point set in general position.

    Construction validates the set: duplicate points or a collinear
    triple raise (GeneralPositionError carries the witnessing triple).
    Points are addressed by 0-based index throughout the library.
    """

    __slots__ = ("points",)

    def __init__(self, coords: Iterable):
        items = list(coords)
        pts = []
        exact = True
        for item in items:
            if isinstance(item, Point):
                pts.append(item)
            else:
                x, y = item
                if isinstance(x, int) and isinstance(y, int):
                    pts.append(Point(x, y))
                else:
                    exact = False
                    break
        if not exact:
            pts = list(_clear_denominators(
                tuple(p) if isinstance(p, Point) else (p[0], p[1]) for p in items
            ))
        bad = validate_general_position(pts)
        if bad is not None:
            raise GeneralPositionError(bad)
        object.__setattr__(self, "points", tuple(pts))

    def __setattr__(self, name, value):
        raise AttributeError("PointSet is immutable")

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return "PointSet(%r)" % (list((p.x, p.y) for p in self.points),)

    def replace(self, i: int, p) -> "PointSet":
        """A copy with point i moved to p (p may have rational coordinates)."""
        coords = [(q.x, q.y) for q in self.points]
        coords[i] = (p[0], p[1]) if not isinstance(p, Point) else (p.x, p.y)
        return PointSet(coords)


def convex_hull(S: PointSet) -> Tuple[int, ...]:
    """Indices of the extreme points, counterclockwise.

    The walk starts at the lexicographically smallest point.  Under
    general position no hull edge contains a third point, so the hull
    is exactly the set of extreme points.
    """
    n = len(S)
    if n < 3:
        raise ValueError("hull needs at least 3 points")
    idx = sorted(range(n), key=lambda i: (S[i].x, S[i].y))
    lower = []
    for i in idx:
        while len(lower) >= 2 and cross(
            S[lower[-2]].x, S[lower[-2]].y,
            S[lower[-1]].x, S[lower[-1]].y,
            S[i].x, S[i].y,
        ) <= 0:
            lower.pop()
        lower.append(i)
    upper = []
    for i in reversed(idx):
        while len(upper) >= 2 and cross(
            S[upper[-2]].x, S[upper[-2]].y,
            S[upper[-1]].x, S[upper[-1]].y,
            S[i].x, S[i].y,
        ) <= 0:
            upper.pop()
        upper.append(i)
    return tuple(lower[:-1] + upper[:-1])


def hull_size(S: PointSet) -> int:
    return len(convex_hull(S))


def is_extreme(S: PointSet, i: int) -> bool:
    return i in convex_hull(S)


class OrderType:
    """The orientation of every ordered triple of a point set.

    Internally one orientation is stored per sorted index triple; the
    orientation of an arbitrary ordered triple follows by permutation
    parity, so antisymmetry holds by construction.
    """

    __slots__ = ("n", "_o")

    def __init__(self, n: int, orientations):
        self.n = n
        self._o = dict(orientations)

    @classmethod
    def of(cls, S: PointSet) -> "OrderType":
        n = len(S)
        o = {}
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    o[(i, j, k)] = orientation(S[i], S[j], S[k])
        return cls(n, o)

    def __getitem__(self, triple: Tuple[int, int, int]) -> Orientation:
        i, j, k = triple
        if len({i, j, k}) != 3:
            raise ValueError("triple must have three distinct indices")
        key = tuple(sorted((i, j, k)))
        base = self._o[key]
        # parity of the permutation taking sorted order to (i, j, k)
        perm = (i, j, k)
        inversions = sum(
            1 for a in range(3) for b in range(a + 1, 3) if perm[a] > perm[b]
        )
        return base if inversions % 2 == 0 else Orientation(-base)

    def triples(self):
        return self._o.items()

    def __eq__(self, other) -> bool:
        return isinstance(other, OrderType) and self.n == other.n and self._o == other._o

    def diff(self, other: "OrderType"):
        """Sorted triples on which the two order types disagree."""
        if self.n != other.n:
            raise ValueError("order types of different sizes")
        return {t for t, v in self._o.items() if other._o[t] != v}


def order_type(S: PointSet) -> OrderType:
    return OrderType.of(S)

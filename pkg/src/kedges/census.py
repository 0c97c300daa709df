"""j-edge and (<=k)-edge censuses of a planar point set.

A segment spanned by two points of the set is a j-edge when exactly j
points lie strictly on its smaller side.  The census collects the
counts e_0..e_m with m = floor((n-2)/2); their prefix sums are the
cumulative counts E_0..E_m.  Two independent routes are provided: a
quadratic-per-point brute force and an O(n^2 log n) rotational sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import comb
from typing import List, Sequence, Tuple

from .geometry import (
    GeneralPositionError,
    Orientation,
    Point,
    PointSet,
    cross,
    orientation,
)


def max_depth(n: int) -> int:
    """Largest possible edge depth m = floor((n-2)/2)."""
    return (n - 2) // 2


@dataclass(frozen=True)
class EdgeVector:
    """Unoriented depth counts (e_0, ..., e_m) of an n-point set."""

    n: int
    e: Tuple[int, ...]

    def __post_init__(self):
        m = max_depth(self.n)
        if len(self.e) != m + 1:
            raise ValueError("expected %d entries for n=%d, got %d" % (m + 1, self.n, len(self.e)))
        if any(v < 0 for v in self.e):
            raise ValueError("negative edge count in %r" % (self.e,))
        if sum(self.e) != comb(self.n, 2):
            raise ValueError("edge counts sum to %d, expected C(%d,2)=%d" % (sum(self.e), self.n, comb(self.n, 2)))

    @property
    def m(self) -> int:
        return max_depth(self.n)

    @property
    def halving(self) -> int:
        """Number of edges at the deepest level (halving edges)."""
        return self.e[-1]

    def cumulative(self) -> "CumulativeEdgeVector":
        total = 0
        out = []
        for v in self.e:
            total += v
            out.append(total)
        return CumulativeEdgeVector(self.n, tuple(out))


@dataclass(frozen=True)
class CumulativeEdgeVector:
    """Prefix sums (E_0, ..., E_m); E_m always equals C(n,2)."""

    n: int
    E: Tuple[int, ...]

    def __post_init__(self):
        m = max_depth(self.n)
        if len(self.E) != m + 1:
            raise ValueError("expected %d entries for n=%d, got %d" % (m + 1, self.n, len(self.E)))
        prev = 0
        for v in self.E:
            if v < prev:
                raise ValueError("cumulative counts must be nondecreasing: %r" % (self.E,))
            prev = v
        if self.E[-1] != comb(self.n, 2):
            raise ValueError("E_m is %d, expected C(%d,2)=%d" % (self.E[-1], self.n, comb(self.n, 2)))

    @property
    def m(self) -> int:
        return max_depth(self.n)

    def edge_vector(self) -> EdgeVector:
        prev = 0
        out = []
        for v in self.E:
            out.append(v - prev)
            prev = v
        return EdgeVector(self.n, tuple(out))


def cumulative(e: EdgeVector) -> CumulativeEdgeVector:
    return e.cumulative()


def edge_depth(S: PointSet, p: int, q: int) -> int:
    """Depth of the segment (p, q): the size of its smaller open side."""
    if p == q:
        raise ValueError("edge needs two distinct indices")
    a, b = S[p], S[q]
    left = 0
    right = 0
    for i in range(len(S)):
        if i == p or i == q:
            continue
        o = orientation(a, b, S[i])
        if o == Orientation.CCW:
            left += 1
        else:
            right += 1
    return min(left, right)


def edge_vector_bruteforce(S: PointSet) -> EdgeVector:
    """Depth histogram by direct side counting over all pairs, O(n^3)."""
    n = len(S)
    counts = [0] * (max_depth(n) + 1)
    for p in range(n):
        for q in range(p + 1, n):
            counts[edge_depth(S, p, q)] += 1
    return EdgeVector(n, tuple(counts))


def _angular_sort(vecs: List[Tuple[int, int, int]], pivot: int) -> List[Tuple[int, int, int]]:
    """Sort (dx, dy, index) vectors counterclockwise from angle 0.

    A tie means two points are collinear with the pivot, which general
    position forbids; the comparator reports it as a violation.
    """

    def half(v):
        dx, dy, _ = v
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(u, v):
        hu, hv = half(u), half(v)
        if hu != hv:
            return -1 if hu < hv else 1
        c = u[0] * v[1] - u[1] * v[0]
        if c == 0:
            raise GeneralPositionError(tuple(sorted((pivot, u[2], v[2]))))
        return -1 if c > 0 else 1

    return sorted(vecs, key=cmp_to_key(cmp))


def oriented_edge_counts(S: PointSet) -> Tuple[int, ...]:
    """Histogram H where H[r] counts ordered pairs (p, q) with exactly r
    points strictly to the right of the directed line p -> q.

    Computed by a rotational sweep around every point: after sorting the
    other points by angle, the count of points in the open half plane to
    the left of each direction is maintained by a sliding window.
    """
    n = len(S)
    if n < 3:
        raise ValueError("census needs at least 3 points")
    H = [0] * (n - 1)
    for p in range(n):
        o = S[p]
        vecs = [(S[j].x - o.x, S[j].y - o.y, j) for j in range(n) if j != p]
        vs = _angular_sort(vecs, p)
        t = len(vs)
        k = 0
        for i in range(t):
            if k < i + 1:
                k = i + 1
            while k < i + t:
                u = vs[i]
                w = vs[k % t]
                if u[0] * w[1] - u[1] * w[0] > 0:
                    k += 1
                else:
                    break
            left = k - i - 1
            H[n - 2 - left] += 1
    return tuple(H)


def edge_vector_sweep(S: PointSet) -> EdgeVector:
    """Depth histogram via the rotational sweep, O(n^2 log n)."""
    n = len(S)
    H = oriented_edge_counts(S)
    m = max_depth(n)
    e = [H[j] for j in range(m + 1)]
    if n % 2 == 0:
        # at the deepest level both orientations of an edge see m points
        # on their right, so the ordered count is exactly twice e_m
        if e[m] % 2 != 0:
            raise RuntimeError("internal: odd ordered count at the halving level")
        e[m] //= 2
    return EdgeVector(n, tuple(e))


def halving_edge_count(S: PointSet) -> int:
    """Number of edges splitting the rest as evenly as possible."""
    return edge_vector_sweep(S).halving


def _normalize_ccw(tri: Sequence[Point]) -> Tuple[Point, Point, Point]:
    a, b, c = tri
    o = orientation(a, b, c)
    if o == Orientation.COLLINEAR:
        raise ValueError("triangle corners are collinear")
    if o == Orientation.CW:
        b, c = c, b
    return a, b, c


def strictly_inside_triangle(p: Point, tri: Sequence[Point]) -> bool:
    a, b, c = _normalize_ccw(tri)
    return (
        orientation(a, b, p) == Orientation.CCW
        and orientation(b, c, p) == Orientation.CCW
        and orientation(c, a, p) == Orientation.CCW
    )


def good_k_edge_count(S: PointSet, triangle: Sequence[Point], k: int) -> int:
    """Count ordered pairs (p, q) of S that have exactly k points of S
    strictly to the right of the directed line p -> q and exactly one
    corner of the enclosing triangle strictly to the right (the "good"
    oriented k-edges relative to that triangle).

    The whole set must lie strictly inside the triangle, and k must lie
    in the window floor(n/3) <= k <= n/2 - 1 where the count is studied.
    """
    n = len(S)
    tri = _normalize_ccw(triangle)
    for i, p in enumerate(S):
        if not strictly_inside_triangle(p, tri):
            raise ValueError("point %d is not strictly inside the triangle" % i)
    if not (n // 3 <= k and 2 * k <= n - 2):
        raise ValueError("k=%d outside the window [floor(n/3), n/2-1] for n=%d" % (k, n))
    count = 0
    for p in range(n):
        for q in range(n):
            if p == q:
                continue
            a, b = S[p], S[q]
            right = 0
            for i in range(n):
                if i == p or i == q:
                    continue
                if orientation(a, b, S[i]) == Orientation.CW:
                    right += 1
            if right != k:
                continue
            corners_right = sum(
                1 for v in tri if orientation(a, b, v) == Orientation.CW
            )
            if corners_right == 1:
                count += 1
    return count

"""Shared test utilities: seeded random configurations and slow oracles."""

from itertools import combinations

from kedges import GeneralPositionError, PointSet, strictly_inside_triangle


def random_point_set(rng, n, radius=50):
    """A random n-point set in general position on the integer square
    [-radius, radius]^2, by rejection sampling.

    The point order is normalized (sorted) so that a set is determined
    by the sampled coordinates alone.
    """
    while True:
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(-radius, radius), rng.randint(-radius, radius)))
        try:
            return PointSet(sorted(pts))
        except GeneralPositionError:
            continue


def convex_polygon(n, scale=1):
    """n points in convex position (on the parabola y = x^2)."""
    return PointSet(
        [(scale * d, scale * d * d) for d in (2 * i - (n - 1) for i in range(n))]
    )


def brute_is_interior(S, i):
    """Whether point i lies strictly inside a triangle of other points."""
    idx = [j for j in range(len(S)) if j != i]
    for a, b, c in combinations(idx, 3):
        if strictly_inside_triangle(S[i], (S[a], S[b], S[c])):
            return True
    return False

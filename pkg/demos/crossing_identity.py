"""Demonstrate the exact link between crossings and the edge census.

Counting convex quadrilaterals gives the number of crossings in the
straight-line drawing of the complete graph.  Weighting each edge depth
j by j*(n-j-2) and adding the crossing count always yields the same
constant 3*C(n,4), no matter how the points are placed.  Rearranged,
this computes crossings directly from the cumulative census, which is
how the identity method works.
"""

import random

from kedges import (
    PointSet,
    crossings_bruteforce,
    cumulative,
    edge_vector_sweep,
    exact_lcr_from_E,
    identity_weighted_sum,
    quadruple_constant,
)


def random_point_set(rng, n, radius):
    points = set()
    while len(points) < n:
        points.add((rng.randint(-radius, radius), rng.randint(-radius, radius)))
    try:
        return PointSet(sorted(points))
    except ValueError:
        return random_point_set(rng, n, radius)


def main():
    rng = random.Random(7)
    print("n   crossings  weighted-sum  total      3*C(n,4)")
    for n in range(5, 13):
        S = random_point_set(rng, n, 40)
        cr = crossings_bruteforce(S).crossings
        w = identity_weighted_sum(edge_vector_sweep(S))
        q = quadruple_constant(n)
        print("%-3d %-10d %-13d %-10d %d" % (n, cr, w, cr + w, q))
        assert cr + w == q
        assert exact_lcr_from_E(cumulative(edge_vector_sweep(S))) == cr
    print()
    print("the total never moves: deep edges trade off against crossings")


if __name__ == "__main__":
    main()

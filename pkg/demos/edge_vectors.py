"""Walk through the edge-depth census of a few small configurations.

The depth of an edge is the smaller number of points on either side of
its supporting line; the census collects one count per depth level.
Deep edges ("halving edges") split the set almost evenly.
"""

from kedges import (
    PointSet,
    cumulative,
    edge_depth,
    edge_vector_bruteforce,
    edge_vector_sweep,
    packaged_point_set,
)


def describe(name, S):
    e = edge_vector_sweep(S)
    E = cumulative(e)
    print("%s (n=%d)" % (name, len(S)))
    print("  e-vector %s   E-vector %s   halving edges %d" % (e.e, E.E, e.halving))
    assert e == edge_vector_bruteforce(S)


def main():
    hexagon = PointSet([(d, d * d) for d in (-5, -3, -1, 1, 3, 5)])
    describe("convex hexagon", hexagon)
    print("  every convex n-gon has e = (n, ..., n, n/2 or n)")
    print()

    tri = PointSet([(0, 0), (12, 0), (0, 12), (3, 4), (5, 6)])
    describe("triangle with two interior points", tri)
    print("  hull edges have depth 0:", end=" ")
    print("depth(0,1) = %d," % edge_depth(tri, 0, 1), end=" ")
    print("an interior pair sits deeper: depth(3,4) = %d" % edge_depth(tri, 3, 4))
    print()

    record = packaged_point_set("halving_max_n8.txt")
    describe("packaged 8-point halving maximizer", record)
    print("  9 halving edges is the maximum any 8-point set achieves")


if __name__ == "__main__":
    main()

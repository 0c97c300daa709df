"""Search for point sets with many halving edges.

For 8 points the deepest census entry e_3 counts edges with exactly
three points on each side.  Uniform grid sampling stalls around 7 or 8,
but nudging one point at a time (keeping any move that does not lose a
halving edge) quickly climbs to 9 -- the most an 8-point set can have,
matching the packaged record configuration.
"""

import random

from kedges import PointSet, edge_vector_sweep, packaged_point_set

N = 8
R = 12


def halving(S):
    return edge_vector_sweep(S).halving


def random_set(rng):
    while True:
        points = set()
        while len(points) < N:
            points.add((rng.randint(-R, R), rng.randint(-R, R)))
        try:
            return PointSet(sorted(points))
        except ValueError:
            continue


def main():
    rng = random.Random(81)

    best = max((random_set(rng) for _ in range(500)), key=halving)
    print("best of 500 uniform samples: %d halving edges" % halving(best))

    cur, cur_h = best, halving(best)
    for step in range(3000):
        i = rng.randrange(N)
        q = (cur[i].x + rng.randint(-2, 2), cur[i].y + rng.randint(-2, 2))
        points = [tuple(p) for p in cur]
        if q in points or not (-R <= q[0] <= R and -R <= q[1] <= R):
            continue
        points[i] = q
        try:
            T = PointSet(sorted(points))
        except ValueError:
            continue
        h = halving(T)
        if h >= cur_h:
            if h > cur_h:
                print("climb step %d: %d halving edges" % (step + 1, h))
            cur, cur_h = T, h
            if h == 9:
                break
    print("final: %d halving edges  %s" % (cur_h, [tuple(p) for p in cur]))
    print()

    record = packaged_point_set("halving_max_n8.txt")
    print("packaged maximizer: %d halving edges  %s" % (
        halving(record), [tuple(p) for p in record]))
    assert cur_h == halving(record)


if __name__ == "__main__":
    main()

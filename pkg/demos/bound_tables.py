"""Print the lower-bound tables and the constants behind them.

For each depth k the cumulative census E_k of any n-point set is at
least 3*C(k+2,2); past k = n/3 a refined count adds a strictly positive
excess, and near k = n/2 a square-root correction takes over.  Summing
the best bound over all depths gives a lower bound on the rectilinear
crossing number, tabulated here next to the known optimal values for
small n.
"""

from kedges import (
    asymptotic_coefficient,
    bound_table,
    crossing_lower_bound_exact,
    epsilon_integral,
    halving_upper_bound,
    sqrt_bound_crossover,
)

# optimal rectilinear crossing numbers for small complete graphs
KNOWN_LCR = {4: 0, 5: 1, 6: 3, 7: 9, 8: 19, 9: 36, 10: 62, 11: 102, 12: 153, 13: 229}


def main():
    n = 21
    table = bound_table(n)
    print("cumulative-census bounds for n = %d" % n)
    print("  k   simple  refined     best")
    for row in table.rows:
        print("  %-3d %-7d %-11d %d" % (row.k, row.simple, row.refined, row.best))
    print()

    print("n    lower bound   known lcr   max halving edges (upper bound)")
    for n in range(10, 22):
        lb = crossing_lower_bound_exact(n)
        known = "%d" % KNOWN_LCR[n] if n in KNOWN_LCR else "?"
        hv = "%d" % halving_upper_bound(n) if n >= 13 else "-"
        print("%-4d %-13d %-11s %s" % (n, lb, known, hv))
    print()

    big = 100000
    k = sqrt_bound_crossover(big)
    ratio = k / float(big)
    print("for n = %d the sqrt correction starts to win at k = %d" % (big, k))
    print("  (ratio k/n = %.5f, just below 1/2)" % ratio)
    print("epsilon budget at that ratio: %.3e" % epsilon_integral(ratio))
    print()

    for n in (300, 3000):
        c = asymptotic_coefficient(n)
        print("normalized bound at n = %-5d : %.6f" % (n, c))
    print("limit 41/108 = %.6f, approached from above" % (41.0 / 108.0))


if __name__ == "__main__":
    main()

"""Acceptance gate: the binding checks for the whole package.

Each test covers one numbered criterion and prints exactly one
``criterion N: PASS/FAIL`` line on the live terminal (capture is
suspended for it), so a test log always shows the verdict per
criterion.
"""

import random
import sys
from fractions import Fraction
from math import comb

from kedges import (
    KINDS,
    GeneratorSpec,
    apply_motion,
    asymptotic_coefficient,
    bound_refined,
    containing_triangle,
    crossing_lower_bound_exact,
    crossings_bruteforce,
    crossings_via_identity,
    cumulative,
    edge_vector_bruteforce,
    edge_vector_sweep,
    epsilon_integral,
    exact_lcr_from_E,
    generate,
    good_k_edge_count,
    halving_upper_bound,
    hull_size,
    identity_weighted_sum,
    max_depth,
    quadruple_constant,
    reduce_to_triangle,
    sqrt_bound_crossover,
)
from helpers import convex_polygon, random_point_set


def _report(capsys, num, ok, detail):
    verdict = "PASS" if ok else "FAIL"
    with capsys.disabled():
        print("criterion %d: %s (%s)" % (num, verdict, detail))
        sys.stdout.flush()
    assert ok, "criterion %d failed: %s" % (num, detail)


_CORPUS = None


def corpus():
    """500 seeded random sets with n cycling through 4..12."""
    global _CORPUS
    if _CORPUS is None:
        rng = random.Random(20240817)
        _CORPUS = [random_point_set(rng, 4 + i % 9, radius=60) for i in range(500)]
    return _CORPUS


def test_criterion_1_oracle_equivalence(capsys):
    """Sweep census and identity crossings agree with brute force."""
    bad = 0
    for S in corpus():
        e_fast = edge_vector_sweep(S)
        e_slow = edge_vector_bruteforce(S)
        c_fast = crossings_via_identity(S).crossings
        c_slow = crossings_bruteforce(S).crossings
        c_abel = exact_lcr_from_E(cumulative(e_slow))
        if e_fast != e_slow or c_fast != c_slow or c_abel != c_slow:
            bad += 1
    _report(capsys, 1, bad == 0, "%d sets, %d disagreements" % (len(corpus()), bad))


def test_criterion_2_depth_identity_constant(capsys):
    """lcr + weighted census equals (n^4-6n^3+11n^2-6n)/8 exactly."""
    bad = 0
    for S in corpus():
        n = len(S)
        lcr = crossings_bruteforce(S).crossings
        lhs = lcr + identity_weighted_sum(edge_vector_bruteforce(S))
        rhs = (n**4 - 6 * n**3 + 11 * n**2 - 6 * n) // 8
        if lhs != rhs or rhs != quadruple_constant(n):
            bad += 1
    _report(capsys, 2, bad == 0, "%d sets, %d identity violations" % (len(corpus()), bad))


def test_criterion_3_exact_lower_bound_values(capsys):
    """Published crossing bounds and per-level bound vectors."""
    ok = (
        crossing_lower_bound_exact(17) == 798
        and crossing_lower_bound_exact(19) == 1318
        and crossing_lower_bound_exact(21) == 2055
        and tuple(bound_refined(19, k) for k in range(8))
        == (3, 9, 18, 30, 45, 63, 86, 115)
        and tuple(bound_refined(21, k) for k in range(9))
        == (3, 9, 18, 30, 45, 63, 84, 111, 144)
    )
    _report(capsys, 3, ok, "n=17/19/21 values and bound vectors for 19, 21")


def test_criterion_4_halving_bound_table(capsys):
    """Halving-edge upper bounds for 13 <= n <= 27."""
    exact = {
        13: 31, 15: 39, 17: 47, 18: 36, 19: 56, 20: 43, 21: 66,
        22: 51, 23: 76, 25: 87, 26: 69, 27: 99,
    }
    ok = all(halving_upper_bound(n) == v for n, v in exact.items())
    # for 14 and 16 points the formula is one above the best published
    # values (22 and 28), which come from a different argument
    ok = ok and halving_upper_bound(14) == 23 and halving_upper_bound(16) == 29
    _report(capsys, 4, ok, "12 exact entries; n=14 gives 23, n=16 gives 29")


def test_criterion_5_asymptotics(capsys):
    """Limit coefficient, gain integral and crossover location."""
    target = 41.0 / 108.0
    coeff = asymptotic_coefficient(3000)
    eps = epsilon_integral(0.4981)
    n = 10**5
    ratio = sqrt_bound_crossover(n) / n
    ok = (
        abs(coeff - target) <= 0.01 * target
        and 1.3e-6 <= eps <= 1.5e-6
        and abs(ratio - 0.4981) <= 0.0005
    )
    _report(
        capsys,
        5,
        ok,
        "coefficient %.6f, integral %.3e, crossover %.5f" % (coeff, eps, ratio),
    )


def _verify_one_reduction(S):
    """Reduce S and recheck every recorded event by brute force.

    Returns (problem, event_count); problem is None when S passes.
    """
    T, trace = reduce_to_triangle(S)
    nevents = sum(len(st.events) for st in trace.steps)
    n = len(S)
    if hull_size(T) != 3 or trace.after.hull_size != 3:
        return "hull not reduced to 3", nevents
    cb = crossings_bruteforce(S).crossings
    ca = crossings_bruteforce(T).crossings
    if (trace.before.crossings, trace.after.crossings) != (cb, ca):
        return "trace summaries disagree with brute force", nevents
    if ca > cb:
        return "crossings increased", nevents
    Eb = cumulative(edge_vector_bruteforce(S)).E
    Ea = cumulative(edge_vector_bruteforce(T)).E
    if any(a > b for a, b in zip(Ea, Eb)):
        return "cumulative vector increased", nevents
    if hull_size(S) > 3 and not any(a < b for a, b in zip(Ea, Eb)):
        return "no strict cumulative drop", nevents
    if edge_vector_bruteforce(T).halving < edge_vector_bruteforce(S).halving:
        return "halving count dropped", nevents
    R = S
    for st in trace.steps:
        prev = Fraction(0)
        for pos, ev in enumerate(st.events):
            mid_before = (prev + ev.t) / 2
            if pos + 1 < len(st.events):
                mid_after = (ev.t + st.events[pos + 1].t) / 2
            else:
                mid_after = (ev.t + st.stop) / 2
            A = apply_motion(R, st.moved, st.ray, mid_before)
            B = apply_motion(R, st.moved, st.ray, mid_after)
            delta = crossings_bruteforce(B).crossings - crossings_bruteforce(A).crossings
            if delta != ev.crossing_delta or ev.crossing_delta != 2 * ev.k - n + 3:
                return "event delta mismatch", nevents
            ea = list(edge_vector_bruteforce(A).e)
            eb = list(edge_vector_bruteforce(B).e)
            if 2 * ev.k != n - 3:
                kk = ev.k if 2 * ev.k < n - 3 else n - 3 - ev.k
                down = 1 if 2 * ev.k < n - 3 else -1
                ea[kk] -= down
                ea[kk + 1] += down
            if ea != eb:
                return "event census transfer mismatch", nevents
            prev = ev.t
        R = apply_motion(R, st.moved, st.ray, st.stop)
    if R != T:
        return "trace replay does not reproduce the output", nevents
    return None, nevents


def test_criterion_6_motion_laws(capsys):
    """Every mutation obeys the delta and transfer laws; reductions
    keep all monotonicity promises."""
    rng = random.Random(6021023)
    bad = 0
    events = 0
    total = 500
    for i in range(total):
        S = random_point_set(rng, 4 + i % 8, radius=50)
        problem, nevents = _verify_one_reduction(S)
        events += nevents
        if problem is not None:
            bad += 1
    _report(
        capsys,
        6,
        bad == 0,
        "%d reductions, %d verified events, %d failures" % (total, events, bad),
    )


def test_criterion_7_bound_soundness_and_tightness(capsys):
    """Generated sets respect the lower bounds; clusters attain them."""
    bad = 0
    sets = []
    for n in range(6, 13):
        sets.append(generate(GeneratorSpec("random-disc", n, seed=n)))
        sets.append(generate(GeneratorSpec("convex", n)))
        sets.append(generate(GeneratorSpec("three-cluster", n)))
    sets.append(generate(GeneratorSpec("grid-search", 5, scale=2)))
    sets.append(generate(GeneratorSpec("grid-search", 7, seed=1, scale=8)))
    for S in sets:
        n = len(S)
        E = cumulative(edge_vector_sweep(S)).E
        if any(E[k] < bound_refined(n, k) for k in range(max_depth(n))):
            bad += 1
            continue
        tri = containing_triangle(S)
        for k in range(n // 3, (n - 2) // 2 + 1):
            if good_k_edge_count(S, tri, k) < 3 * k - n + 3:
                bad += 1
                break
    tight = 0
    for n in range(6, 16):
        S = generate(GeneratorSpec("three-cluster", n))
        E = cumulative(edge_vector_sweep(S)).E
        if all(E[k] == 3 * comb(k + 2, 2) for k in range(n // 3)):
            tight += 1
    ok = bad == 0 and tight == 10
    _report(
        capsys,
        7,
        ok,
        "%d generated sets sound, %d/10 cluster sets tight" % (len(sets) - bad, tight),
    )


def test_criterion_8_convex_position_laws(capsys):
    """Convex n-gons: maximal crossings and E_k = (k+1) n."""
    bad = 0
    for n in range(4, 13):
        S = convex_polygon(n)
        E = cumulative(edge_vector_sweep(S)).E
        if crossings_bruteforce(S).crossings != comb(n, 4):
            bad += 1
        if any(E[k] != (k + 1) * n for k in range(max_depth(n))):
            bad += 1
    _report(capsys, 8, bad == 0, "n = 4..12, %d violations" % bad)

"""Continuous motion of a single point with exact event tracking.

Moving one point p along a ray p0 + t*d keeps every orientation
determinant linear in t, so the parameter values where some triple
through p becomes collinear (the mutation events) are exact rationals.
Crossing such a line through two other points flips exactly one
orientation; if the point playing the center role sees k other points
on its side before the flip, the crossing count changes by 2k - n + 3
and the depth census shifts by one unit between adjacent levels.

A halving ray of an extreme point splits the remaining points as
evenly as possible and is oriented away from the set.  Motion along a
halving ray only ever decreases the crossing count, which drives the
hull reduction: repeatedly moving a suitable pair of extreme points
outward along crossing halving rays shrinks the convex hull until only
a triangle remains.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .census import EdgeVector, edge_vector_sweep
from .crossings import crossings_via_identity
from .geometry import (
    GeneralPositionError,
    Orientation,
    Point,
    PointSet,
    convex_hull,
    cross,
)


class SimultaneousEventError(RuntimeError):
    """Two mutation events share a parameter value.

    The caller is expected to retry with a direction nudged inside the
    same angular gap; only finitely many directions are degenerate.
    """

    def __init__(self, t: Fraction, pairs):
        self.t = t
        self.pairs = tuple(pairs)
        super().__init__("events for pairs %r coincide at t=%s" % (self.pairs, t))


@dataclass(frozen=True)
class Ray:
    """A motion ray: point ``anchor`` moves along anchor + t*direction."""

    anchor: int
    direction: Tuple[int, int]

    def __post_init__(self):
        dx, dy = self.direction
        if not isinstance(dx, int) or not isinstance(dy, int) or (dx == 0 and dy == 0):
            raise ValueError("direction must be a nonzero integer vector")


class HalvingRay(Ray):
    """A ray whose line splits the other points as evenly as possible,
    anchored at an extreme point and oriented away from the set."""


@dataclass(frozen=True)
class MutationEvent:
    moving: int
    pair: Tuple[int, int]
    t: Fraction
    center: int
    k: int
    crossing_delta: int


@dataclass(frozen=True)
class ConfigSummary:
    crossings: int
    edge_vector: EdgeVector
    hull_size: int

    @property
    def halving(self) -> int:
        return self.edge_vector.halving


@dataclass(frozen=True)
class MotionStep:
    moved: int
    ray: Ray
    stop: Fraction
    events: Tuple[MutationEvent, ...]


@dataclass(frozen=True)
class ReductionTrace:
    steps: Tuple[MotionStep, ...]
    before: ConfigSummary
    after: ConfigSummary


def _primitive(dx: int, dy: int) -> Tuple[int, int]:
    g = gcd(abs(dx), abs(dy))
    return (dx // g, dy // g)


def _farey_weights(index: int) -> Tuple[int, int]:
    """Deterministic enumeration (1,1), (1,2), (2,1), (1,3), (3,1), ...

    of coprime positive weight pairs, used to pick (and re-pick) a
    direction strictly inside an angular gap.
    """
    count = 0
    s = 2
    while True:
        for a in range(1, s):
            b = s - a
            if gcd(a, b) != 1:
                continue
            if count == index:
                return (a, b)
            count += 1
        s += 1


def _wedge_sorted(S: PointSet, p: int) -> List[Tuple[int, int, int]]:
    """Vectors to the other points, sorted counterclockwise.

    Requires p extreme, so all vectors fit in an open half plane and
    the pairwise cross product induces a total order.
    """
    import functools

    vecs = [(S[j].x - S[p].x, S[j].y - S[p].y, j) for j in range(len(S)) if j != p]

    def cmp(u, v):
        c = u[0] * v[1] - u[1] * v[0]
        if c == 0:
            raise GeneralPositionError(tuple(sorted((p, u[2], v[2]))))
        return -1 if c > 0 else 1

    return sorted(vecs, key=functools.cmp_to_key(cmp))


def halving_ray(S: PointSet, p: int, attempt: int = 0) -> HalvingRay:
    """A halving ray for the extreme point p.

    The other points are sorted by angle around p; the tail direction
    is taken strictly inside the median angular gap (splitting the
    points (n-1)/2 : (n-1)/2 for odd n and (n-2)/2 : n/2 for even n)
    and the head points the opposite way, leaving the set.  ``attempt``
    selects progressively different directions inside the same gap.
    """
    if p not in convex_hull(S):
        raise ValueError("point %d is not extreme" % p)
    vs = _wedge_sorted(S, p)
    g = (len(S) - 1) // 2
    u, w = vs[g - 1], vs[g]
    a, b = _farey_weights(attempt)
    tx, ty = a * u[0] + b * w[0], a * u[1] + b * w[1]
    dx, dy = _primitive(-tx, -ty)
    return HalvingRay(p, (dx, dy))


def is_halving_ray(S: PointSet, ray: Ray) -> bool:
    """Check the halving-ray invariants of ``ray`` against S.

    The anchor must be extreme, the supporting line must avoid all
    other points and split them as evenly as possible, and the head
    must point away from the set (the tail direction lies strictly
    inside the angular wedge spanned by the other points).
    """
    p = ray.anchor
    if p not in convex_hull(S):
        return False
    dx, dy = ray.direction
    tx, ty = -dx, -dy
    left = right = 0
    for j in range(len(S)):
        if j == p:
            continue
        vx, vy = S[j].x - S[p].x, S[j].y - S[p].y
        c = tx * vy - ty * vx
        if c == 0:
            return False
        if c > 0:
            left += 1
        else:
            right += 1
    n = len(S)
    if {left, right} != ({(n - 1) // 2, n // 2} if n % 2 == 1 else {(n - 2) // 2, n // 2}):
        return False
    # head away from the set: the tail must lie strictly inside the
    # angular wedge, i.e. strictly between its two boundary vectors
    vs = _wedge_sorted(S, p)
    first = vs[0]
    last = vs[-1]
    return (
        first[0] * ty - first[1] * tx > 0
        and tx * last[1] - ty * last[0] > 0
    )


def _h_side_counts(S: PointSet, p: int, q: int) -> Tuple[int, int]:
    a, b = S[p], S[q]
    pos = neg = 0
    for j in range(len(S)):
        if j == p or j == q:
            continue
        c = cross(a.x, a.y, b.x, b.y, S[j].x, S[j].y)
        if c > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg


def _constrained_ray(
    S: PointSet, anchor: int, h_vec: Tuple[int, int], h_sign: int, attempt: int
) -> HalvingRay:
    """A halving ray for ``anchor`` (a point on the line with direction
    ``h_vec``) whose tail enters the side of that line with orientation
    sign ``h_sign``.

    Of the one (odd n) or two (even n) median angular gaps, gaps whose
    whole direction cone lies on the wrong side of the line are
    skipped; inside an admissible gap, weight pairs are enumerated and
    filtered to combinations crossing into the required side.
    """
    n = len(S)
    if anchor not in convex_hull(S):
        raise ValueError("point %d is not extreme" % anchor)
    hx, hy = h_vec
    vs = _wedge_sorted(S, anchor)
    gaps = [(n - 1) // 2] if n % 2 == 1 else [(n - 1) // 2, n // 2]
    for g in gaps:
        u, w = vs[g - 1], vs[g]
        cu = h_sign * (hx * u[1] - hy * u[0])
        cw = h_sign * (hx * w[1] - hy * w[0])
        if cu <= 0 and cw <= 0:
            continue
        picked = 0
        index = 0
        while True:
            a, b = _farey_weights(index)
            index += 1
            if a * cu + b * cw <= 0:
                continue
            if picked == attempt:
                tx, ty = a * u[0] + b * w[0], a * u[1] + b * w[1]
                dx, dy = _primitive(-tx, -ty)
                return HalvingRay(anchor, (dx, dy))
            picked += 1
    raise RuntimeError("internal: no admissible tail direction found")


def _orient_frac(ax, ay, bx, by, cx, cy) -> int:
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def _line_intersection_inside_hull(S: PointSet, rp: Ray, rq: Ray) -> bool:
    """Whether the supporting lines of the two rays meet strictly
    inside the convex hull of S."""
    p, q = S[rp.anchor], S[rq.anchor]
    dp, dq = rp.direction, rq.direction
    denom = dp[0] * dq[1] - dp[1] * dq[0]
    if denom == 0:
        return False
    # solve p + s*dp = q + t*dq
    s = Fraction((q.x - p.x) * dq[1] - (q.y - p.y) * dq[0], denom)
    zx = p.x + s * dp[0]
    zy = p.y + s * dp[1]
    hull = convex_hull(S)
    for i in range(len(hull)):
        a = S[hull[i]]
        b = S[hull[(i + 1) % len(hull)]]
        if _orient_frac(a.x, a.y, b.x, b.y, zx, zy) <= 0:
            return False
    return True


def halving_ray_pair(
    S: PointSet, p: int, q: int, attempt_p: int = 0, attempt_q: int = 0
) -> Tuple[HalvingRay, HalvingRay]:
    """Halving rays for two non-consecutive extreme points whose tails
    enter the side of the line pq holding at least ceil((n-2)/2) points
    and whose supporting lines therefore cross inside the hull.
    """
    hull = convex_hull(S)
    if p not in hull or q not in hull:
        raise ValueError("both points must be extreme")
    ip, iq = hull.index(p), hull.index(q)
    if (ip - iq) % len(hull) in (1, len(hull) - 1):
        raise ValueError("points %d and %d are consecutive on the hull" % (p, q))
    pos, neg = _h_side_counts(S, p, q)
    h_sign = 1 if pos >= neg else -1
    h_vec = (S[q].x - S[p].x, S[q].y - S[p].y)
    ray_p = _constrained_ray(S, p, h_vec, h_sign, attempt_p)
    ray_q = _constrained_ray(S, q, h_vec, h_sign, attempt_q)
    if not _line_intersection_inside_hull(S, ray_p, ray_q):
        raise RuntimeError("internal: ray lines do not cross inside the hull")
    return ray_p, ray_q


def _event_parameters(S: PointSet, ray: Ray) -> List[Tuple[Fraction, Tuple[int, int]]]:
    """All positive parameters where the moving point crosses a line
    through two other points, with the pair, unsorted."""
    p = ray.anchor
    p0 = S[p]
    dx, dy = ray.direction
    out = []
    n = len(S)
    for i in range(n):
        if i == p:
            continue
        ax, ay = S[i].x - p0.x, S[i].y - p0.y
        for j in range(i + 1, n):
            if j == p:
                continue
            bx, by = S[j].x - p0.x, S[j].y - p0.y
            A = ax * by - ay * bx
            B = (bx - ax) * dy - (by - ay) * dx
            if B == 0:
                continue
            if (A > 0) == (B > 0):
                continue
            out.append((Fraction(-A, B), (i, j)))
    return out


def _classify(S: PointSet, ray: Ray, t: Fraction, t_prev: Fraction, pair: Tuple[int, int]) -> MutationEvent:
    p = ray.anchor
    dx, dy = ray.direction
    i, j = pair
    # position of the moving point exactly at the event
    ex = S[p].x + t * dx
    ey = S[p].y + t * dy
    a, b = S[i], S[j]
    span = (b.x - a.x) ** 2 + (b.y - a.y) ** 2
    s_p = (ex - a.x) * (b.x - a.x) + (ey - a.y) * (b.y - a.y)
    if 0 < s_p < span:
        center = p
    elif s_p < 0:
        center = i
    else:
        center = j
    # side counts just before the event
    tb = (t_prev + t) / 2
    mx = S[p].x + tb * dx
    my = S[p].y + tb * dy
    coords: Dict[int, Tuple[Fraction, Fraction]] = {
        idx: (Fraction(S[idx].x), Fraction(S[idx].y)) for idx in range(len(S))
    }
    coords[p] = (mx, my)
    line = [x for x in (p, i, j) if x != center]
    la, lb = coords[line[0]], coords[line[1]]
    cc = coords[center]
    ref = _orient_frac(la[0], la[1], lb[0], lb[1], cc[0], cc[1])
    k = 0
    for idx in range(len(S)):
        if idx in (p, i, j):
            continue
        z = coords[idx]
        if _orient_frac(la[0], la[1], lb[0], lb[1], z[0], z[1]) == ref:
            k += 1
    n = len(S)
    return MutationEvent(
        moving=p, pair=pair, t=t, center=center, k=k, crossing_delta=2 * k - n + 3
    )


def _events(S: PointSet, ray: Ray, stop: Optional[Fraction]) -> List[MutationEvent]:
    raw = _event_parameters(S, ray)
    if stop is not None:
        raw = [ev for ev in raw if ev[0] <= stop]
    raw.sort(key=lambda ev: ev[0])
    for a, b in zip(raw, raw[1:]):
        if a[0] == b[0]:
            raise SimultaneousEventError(a[0], [a[1], b[1]])
    out = []
    t_prev = Fraction(0)
    for t, pair in raw:
        out.append(_classify(S, ray, t, t_prev, pair))
        t_prev = t
    return out


def motion_events(S: PointSet, p: int, ray: Ray, stop) -> List[MutationEvent]:
    """Mutation events for moving p along the ray, for parameters in
    (0, stop], sorted ascending.  Events sharing a parameter raise
    SimultaneousEventError (the caller retries with a nudged ray)."""
    if ray.anchor != p:
        raise ValueError("ray is anchored at %d, not %d" % (ray.anchor, p))
    stop = Fraction(stop)
    if stop <= 0:
        raise ValueError("stop must be positive")
    return _events(S, ray, stop)


def apply_motion(S: PointSet, p: int, ray: Ray, stop) -> PointSet:
    """The set with p moved to its exact position at parameter ``stop``.

    The moved coordinate is rational; the whole set is rescaled by one
    positive integer factor (the cleared denominator), which preserves
    the order type.  A stop landing on an event raises the
    general-position error; callers retry with a different stop.
    """
    if ray.anchor != p:
        raise ValueError("ray is anchored at %d, not %d" % (ray.anchor, p))
    stop = Fraction(stop)
    if stop <= 0:
        raise ValueError("stop must be positive")
    nx = S[p].x + stop * ray.direction[0]
    ny = S[p].y + stop * ray.direction[1]
    return S.replace(p, (nx, ny))


def config_summary(S: PointSet) -> ConfigSummary:
    return ConfigSummary(
        crossings=crossings_via_identity(S).crossings,
        edge_vector=edge_vector_sweep(S),
        hull_size=len(convex_hull(S)),
    )


_MAX_ATTEMPTS = 64


class _RoundRetry(Exception):
    """The parallel stop line was not placed close enough to the set."""


def _signed_offset(h_vec, h_sign, origin: Point, x, y):
    """Signed distance surrogate of (x, y) across the line through
    ``origin`` with direction ``h_vec``; positive on the tail side."""
    hx, hy = h_vec
    return h_sign * (hx * (y - origin.y) - hy * (x - origin.x))


def _stop_at_offset(S: PointSet, ray: Ray, h_vec, h_sign, origin: Point, target) -> Fraction:
    """Parameter at which the ray's anchor reaches signed offset
    ``target``; the head must be driving the offset down."""
    a = S[ray.anchor]
    start = _signed_offset(h_vec, h_sign, origin, a.x, a.y)
    dx, dy = ray.direction
    rate = h_sign * (h_vec[0] * dy - h_vec[1] * dx)
    if rate >= 0:
        raise RuntimeError("internal: ray head does not leave across the pair line")
    t = Fraction(target - start, rate)
    if t <= 0:
        raise RuntimeError("internal: stop parameter is not positive")
    return t


def _round_once(
    S0: PointSet, p: int, q: int, attempt_p: int, attempt_q: int, depth: Fraction
) -> Tuple[PointSet, List[MotionStep]]:
    """One reduction round: move p, then q, onto the common line
    parallel to their connecting line at ``depth`` beyond the set.

    Raises SimultaneousEventError (with ``phase`` marking which motion)
    when a ray needs a nudge, and _RoundRetry when the stop line has to
    move closer to the set.
    """
    ray_p, ray_q = halving_ray_pair(S0, p, q, attempt_p, attempt_q)
    pos, neg = _h_side_counts(S0, p, q)
    h_sign = 1 if pos >= neg else -1
    h_vec = (S0[q].x - S0[p].x, S0[q].y - S0[p].y)
    low = min(
        _signed_offset(h_vec, h_sign, S0[p], S0[j].x, S0[j].y)
        for j in range(len(S0))
        if j != p and j != q
    )
    target = low - depth
    t_p = _stop_at_offset(S0, ray_p, h_vec, h_sign, S0[p], target)
    try:
        events_p = _events(S0, ray_p, t_p)
    except SimultaneousEventError as exc:
        exc.phase = 0
        raise
    if events_p and events_p[-1].t == t_p:
        raise _RoundRetry
    S1 = apply_motion(S0, p, ray_p, t_p)
    step_p = MotionStep(p, ray_p, t_p, tuple(events_p))

    # moving p never crosses the line of q's ray (the two lines meet in
    # their tails, inside the hull), so the split is untouched; only q's
    # extremality could degrade, in which case the stop line moves closer
    if not is_halving_ray(S1, ray_q):
        raise _RoundRetry
    t_q = _stop_at_offset(S1, ray_q, h_vec, h_sign, S1[p], Fraction(0))
    try:
        events_q = _events(S1, ray_q, t_q)
    except SimultaneousEventError as exc:
        exc.phase = 1
        raise
    if events_q and events_q[-1].t == t_q:
        raise _RoundRetry
    S2 = apply_motion(S1, q, ray_q, t_q)
    step_q = MotionStep(q, ray_q, t_q, tuple(events_q))
    return S2, [step_p, step_q]


def reduce_to_triangle(S: PointSet) -> Tuple[PointSet, ReductionTrace]:
    """Shrink the convex hull to a triangle without ever increasing the
    crossing count.

    Each round picks a non-consecutive pair of hull points, equips both
    with halving rays whose tails share the heavier side of their
    connecting line, and moves first one and then the other point onto
    a common stop line parallel to that connecting line, placed just
    beyond the far side of the set.  Every mutation on the way strictly
    decreases the crossing count and shifts one census unit downward,
    and the hull points between the pair on the stop-line side become
    interior, so the hull shrinks every round.  If a stop line turns
    out to sit too deep (a landing hits an event, or the hull fails to
    shrink), it is retried exponentially closer to the set.
    """
    steps: List[MotionStep] = []
    before = config_summary(S)
    while True:
        hull = convex_hull(S)
        if len(hull) == 3:
            break
        p, q = hull[0], hull[2]
        size_before = len(hull)
        attempt = [0, 0]
        depth_exp = 0
        for _ in range(_MAX_ATTEMPTS):
            try:
                S2, new_steps = _round_once(
                    S, p, q, attempt[0], attempt[1], Fraction(1, 2 ** depth_exp)
                )
            except SimultaneousEventError as exc:
                attempt[getattr(exc, "phase", 0)] += 1
                continue
            except (_RoundRetry, GeneralPositionError):
                depth_exp += 1
                continue
            if len(convex_hull(S2)) >= size_before:
                depth_exp += 1
                continue
            S = S2
            steps.extend(new_steps)
            break
        else:
            raise RuntimeError("internal: hull reduction failed to make progress")
    after = config_summary(S)
    return S, ReductionTrace(tuple(steps), before, after)


def halving_ray_stable(S: PointSet) -> bool:
    """For a set with a triangular hull: whether no motion of an
    extreme point along its halving ray can ever change the order type.

    Equivalent to requiring, for every extreme p, that the angular
    order of the other points around p coincides with their order in
    the direction orthogonal to p's halving ray: a pair disagreeing
    between the two orders is exactly a pending mutation event.
    """
    hull = convex_hull(S)
    if len(hull) != 3:
        raise ValueError("defined for sets with a triangular hull")
    for p in hull:
        ray = halving_ray(S, p)
        if _event_parameters(S, ray):
            return False
    return True

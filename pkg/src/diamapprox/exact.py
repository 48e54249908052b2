"""Exact diameter oracles: brute force (any dimension) and rotating
calipers over the convex hull (plane only).

The hull uses an exact orientation predicate: a fast floating-point
determinant guarded by a forward error bound, with a rational-arithmetic
fallback when the sign is not provably correct. Hull correctness is the
oracle's correctness, so no epsilon tuning is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from .pointset import PointSet

# Shewchuk-style static filter bound for the 2x2 orientation determinant.
_EPS = math.ulp(1.0) / 2.0
_ORIENT_BOUND = (3.0 + 16.0 * _EPS) * _EPS


@dataclass(frozen=True)
class ExactResult:
    """Exact diameter with its witness pair and pair-evaluation count."""

    diameter: float
    witness: Tuple[int, int]
    comparisons: int


def brute_force_diameter(point_set: PointSet) -> ExactResult:
    """Exact maximum over all n(n-1)/2 point pairs.

    Ties are broken toward the lexicographically smallest index pair.
    """
    n = point_set.n
    if n < 2:
        raise ValueError("diameter needs at least two points")
    coords = point_set.coords
    best_d2 = -1.0
    best = (0, 1)
    for i in range(n - 1):
        diff = coords[i + 1 :] - coords[i]
        d2 = np.einsum("ij,ij->i", diff, diff)
        j = int(np.argmax(d2))
        if d2[j] > best_d2:
            best_d2 = float(d2[j])
            best = (i, i + 1 + j)
    return ExactResult(
        diameter=math.sqrt(best_d2), witness=best, comparisons=n * (n - 1) // 2
    )


def _cross_sign(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    """Exact sign of the cross product (b - a) x (d - c).

    With c = a, d = arbitrary this is the usual 3-point orientation
    test. The float path is accepted only when the determinant clears
    the rounding-error bound; otherwise the sign is recomputed exactly
    with rationals (doubles convert to Fraction without loss).
    """
    t1 = (bx - ax) * (dy - cy)
    t2 = (by - ay) * (dx - cx)
    det = t1 - t2
    bound = _ORIENT_BOUND * (abs(t1) + abs(t2))
    if det > bound:
        return 1
    if det < -bound:
        return -1
    det_exact = (Fraction(bx) - Fraction(ax)) * (Fraction(dy) - Fraction(cy)) - (
        Fraction(by) - Fraction(ay)
    ) * (Fraction(dx) - Fraction(cx))
    if det_exact > 0:
        return 1
    if det_exact < 0:
        return -1
    return 0


def _orient(pa, pb, pc) -> int:
    """Sign of the signed area of triangle (pa, pb, pc): +1 for a
    counter-clockwise turn, -1 clockwise, 0 collinear."""
    return _cross_sign(pa[0], pa[1], pb[0], pb[1], pa[0], pa[1], pc[0], pc[1])


def convex_hull_2d(point_set: PointSet) -> List[int]:
    """Monotone-chain convex hull; vertex indices in CCW order.

    Collinear interior points are excluded and duplicate points are
    collapsed (the lowest original index survives).
    """
    if point_set.m != 2:
        raise ValueError(f"convex hull implemented for m=2 only, got m={point_set.m}")
    coords = point_set.coords
    order = np.lexsort((coords[:, 1], coords[:, 0]))
    # Drop exact duplicates; lexsort is stable, so the first of each
    # run of equal points is the one with the lowest index.
    kept: List[int] = []
    for idx in order:
        i = int(idx)
        if kept and coords[i][0] == coords[kept[-1]][0] and coords[i][1] == coords[kept[-1]][1]:
            continue
        kept.append(i)
    if len(kept) == 1:
        return kept

    def build(seq):
        chain: List[int] = []
        for i in seq:
            while (
                len(chain) >= 2
                and _orient(coords[chain[-2]], coords[chain[-1]], coords[i]) <= 0
            ):
                chain.pop()
            chain.append(i)
        return chain

    lower = build(kept)
    upper = build(reversed(kept))
    return lower[:-1] + upper[:-1]


def _pair_d2(coords, i: int, j: int) -> float:
    dx = coords[i][0] - coords[j][0]
    dy = coords[i][1] - coords[j][1]
    return dx * dx + dy * dy


def rotating_calipers_diameter_2d(point_set: PointSet) -> ExactResult:
    """Exact planar diameter via antipodal pairs of the convex hull.

    Agrees with `brute_force_diameter` on every input; cost is the hull
    sort plus a linear sweep over hull vertices.
    """
    if point_set.m != 2:
        raise ValueError(
            f"rotating calipers implemented for m=2 only, got m={point_set.m}"
        )
    n = point_set.n
    if n < 2:
        raise ValueError("diameter needs at least two points")
    coords = point_set.coords
    hull = convex_hull_2d(point_set)
    h = len(hull)
    if h == 1:
        # All points identical.
        return ExactResult(diameter=0.0, witness=(0, 1), comparisons=1)
    if h == 2:
        a, b = hull
        pair = (a, b) if a < b else (b, a)
        return ExactResult(
            diameter=math.sqrt(_pair_d2(coords, a, b)), witness=pair, comparisons=1
        )

    # For each hull edge advance the opposite vertex while the strip
    # between the supporting parallel lines keeps widening; the pairs
    # touched along the way include every antipodal pair.
    candidates = set()
    j = 1
    for i in range(h):
        i2 = (i + 1) % h
        a, b = coords[hull[i]], coords[hull[i2]]
        steps = 0
        while True:
            j2 = (j + 1) % h
            c, d = coords[hull[j]], coords[hull[j2]]
            if _cross_sign(a[0], a[1], b[0], b[1], c[0], c[1], d[0], d[1]) <= 0:
                break
            j = j2
            candidates.add((i, j))
            steps += 1
            if steps > 2 * h:  # cannot happen on a strictly convex hull
                raise RuntimeError("antipodal sweep failed to terminate")
        candidates.add((i, j))
        candidates.add((i2, j))

    best_d2 = -1.0
    best = (0, 1)
    comparisons = 0
    for hi, hj in sorted(candidates):
        gi, gj = hull[hi], hull[hj]
        if gi == gj:
            continue
        pair = (gi, gj) if gi < gj else (gj, gi)
        d2 = _pair_d2(coords, pair[0], pair[1])
        comparisons += 1
        if d2 > best_d2 or (d2 == best_d2 and pair < best):
            best_d2 = d2
            best = pair
    return ExactResult(diameter=math.sqrt(best_d2), witness=best, comparisons=comparisons)

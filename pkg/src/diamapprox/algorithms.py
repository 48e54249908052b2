"""Farthest-point sweep algorithms with certified diameter bounds.

All estimates returned here are true lower bounds on the diameter,
each backed by a witness pair of set members. Upper bounds carry a
certificate tag naming the inequality that produced them:

  ONE_SWEEP           diam <= 2 * d(p, f(p))          (any dimension)
  DOUBLE_SWEEP_SQRT3  diam <= sqrt(3) * d(f(p), f2(p)) (any dimension)
  RHO_STAR_BALL       diam <= 2 * d(q, f(q))           (plane only)
  C_STAR_2D           diam <= c * max(d(f(p),f2(p)), d(f(q),f2(q)))
                                                       (plane only)

where f(p) is the farthest set member from p and c = sqrt(5 - 2*sqrt(3)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .pointset import EvalCounter, PointSet, distance, farthest

SQRT3 = math.sqrt(3.0)

# Guarantee factor proven for the plane, ~1.2393096, and the ball-test
# threshold derived from it.
C_STAR = math.sqrt(5.0 - 2.0 * SQRT3)
RHO_STAR = C_STAR / 2.0

ONE_SWEEP = "ONE_SWEEP"
DOUBLE_SWEEP_SQRT3 = "DOUBLE_SWEEP_SQRT3"
RHO_STAR_BALL = "RHO_STAR_BALL"
C_STAR_2D = "C_STAR_2D"


@dataclass(frozen=True)
class RunConfig:
    """Iteration count, starting point, and (for the randomized
    algorithm) PRNG seed."""

    t: int
    start_index: int = 0
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"iteration count must be >= 1, got {self.t}")
        if self.start_index < 0:
            raise ValueError(f"start_index must be >= 0, got {self.start_index}")


@dataclass(frozen=True)
class CertifiedBounds:
    """Lower/upper diameter bounds plus the certificate that fired.

    `factor` is the ratio upper/lower actually certified; it never
    exceeds the guarantee constant of `certificate`.
    """

    lower: float
    upper: float
    factor: float
    certificate: str


@dataclass(frozen=True)
class DiameterEstimate:
    """A certified lower bound with its witness pair and work counters."""

    lower: float
    witness: Tuple[int, int]
    scans: int
    distance_evaluations: int


def _check_start(point_set: PointSet, start: int) -> None:
    if not 0 <= start < point_set.n:
        raise ValueError(f"start index {start} out of range [0, {point_set.n})")


def _certify(lower: float, candidates) -> CertifiedBounds:
    """Pick the tightest upper bound; stable on ties (first wins)."""
    upper, certificate = candidates[0]
    for value, tag in candidates[1:]:
        if value < upper:
            upper, certificate = value, tag
    if lower > 0.0:
        factor = upper / lower
    else:
        factor = 1.0 if upper == 0.0 else math.inf
    return CertifiedBounds(lower=lower, upper=upper, factor=factor, certificate=certificate)


def compute_p_prime(p, fp, r_p: float, r_fp: float) -> np.ndarray:
    """Point on the affine line through p and f(p) at distance r_fp
    from f(p), on the p side."""
    if r_p <= 0.0:
        raise ValueError("degenerate input: farthest distance from p is zero")
    alpha = r_fp / r_p
    p = np.asarray(p, dtype=np.float64)
    fp = np.asarray(fp, dtype=np.float64)
    return alpha * p + (1.0 - alpha) * fp


def compute_q(p, fp, r_p: float, r_fp: float) -> np.ndarray:
    """Midpoint of p' and f(p); lies at distance r_fp / 2 from f(p)."""
    if r_p <= 0.0:
        raise ValueError("degenerate input: farthest distance from p is zero")
    half_alpha = 0.5 * r_fp / r_p
    p = np.asarray(p, dtype=np.float64)
    fp = np.asarray(fp, dtype=np.float64)
    return half_alpha * p + (1.0 - half_alpha) * fp


def double_sweep(point_set: PointSet, start: int = 0) -> CertifiedBounds:
    """Two farthest scans: from the start point, then from its farthest.

    Returns lower = d(f(p), f2(p)) and upper = min(2 d(p, f(p)),
    sqrt(3) d(f(p), f2(p))). Works in any dimension.
    """
    if point_set.n < 2:
        raise ValueError("double_sweep needs at least two points")
    _check_start(point_set, start)
    counter = EvalCounter()
    p = point_set.coords[start]
    first = farthest(point_set, p, counter)
    second = farthest(point_set, point_set.coords[first.index], counter)
    r_p, r_fp = first.dist, second.dist
    return _certify(
        r_fp,
        [(SQRT3 * r_fp, DOUBLE_SWEEP_SQRT3), (2.0 * r_p, ONE_SWEEP)],
    )


def c_star_estimate_2d(point_set: PointSet, start: int = 0) -> CertifiedBounds:
    """Four-scan planar estimate with guarantee factor at most C_STAR.

    Only valid in the plane; higher dimensions get the sqrt(3) factor
    from `double_sweep` instead.
    """
    if point_set.m != 2:
        raise ValueError(
            f"the C_STAR certificate is proven only for m=2, got m={point_set.m}"
        )
    if point_set.n < 2:
        raise ValueError("c_star_estimate_2d needs at least two points")
    _check_start(point_set, start)
    counter = EvalCounter()
    p = point_set.coords[start]
    first = farthest(point_set, p, counter)
    r_p = first.dist
    if r_p == 0.0:
        raise ValueError("degenerate input: all points identical")
    fp = point_set.coords[first.index]
    second = farthest(point_set, fp, counter)
    r_fp = second.dist

    q = compute_q(p, fp, r_p, r_fp)
    third = farthest(point_set, q, counter)
    r_q = third.dist
    fourth = farthest(point_set, point_set.coords[third.index], counter)
    d_fq = fourth.dist

    lower = max(r_fp, d_fq, r_p, r_q)
    if r_q <= RHO_STAR * r_fp:
        branch = (2.0 * r_q, RHO_STAR_BALL)
    else:
        branch = (C_STAR * max(r_fp, d_fq), C_STAR_2D)
    # Clamp against the always-valid sweep bounds.
    return _certify(
        lower,
        [branch, (SQRT3 * r_fp, DOUBLE_SWEEP_SQRT3), (2.0 * r_p, ONE_SWEEP)],
    )


def iterative_approx(point_set: PointSet, cfg: RunConfig) -> DiameterEstimate:
    """Iterative farthest-point estimate: 4 scans per iteration.

    Each iteration updates the running maximum with d(p, f(p)),
    d(f(p), f2(p)) and d(f(q), f2(q)), then restarts from f2(q). If at
    any iteration every remaining distance from p is zero the current
    estimate is returned early (all points coincide with p).
    """
    if point_set.n < 2:
        raise ValueError("iterative_approx needs at least two points")
    _check_start(point_set, cfg.start_index)
    counter = EvalCounter()
    scans = 0
    d_max = 0.0
    witness = (cfg.start_index, cfg.start_index)
    p_idx = cfg.start_index
    for _ in range(cfg.t):
        p = point_set.coords[p_idx]
        first = farthest(point_set, p, counter)
        scans += 1
        r_p = first.dist
        if r_p == 0.0:
            break
        if r_p > d_max:
            d_max, witness = r_p, (p_idx, first.index)
        fp = point_set.coords[first.index]
        second = farthest(point_set, fp, counter)
        scans += 1
        if second.dist > d_max:
            d_max, witness = second.dist, (first.index, second.index)
        q = compute_q(p, fp, r_p, second.dist)
        third = farthest(point_set, q, counter)
        scans += 1
        fourth = farthest(point_set, point_set.coords[third.index], counter)
        scans += 1
        if fourth.dist > d_max:
            d_max, witness = fourth.dist, (third.index, fourth.index)
        p_idx = fourth.index
    return DiameterEstimate(
        lower=d_max,
        witness=witness,
        scans=scans,
        distance_evaluations=counter.distance_evaluations,
    )


def randomized_approx(point_set: PointSet, cfg: RunConfig) -> DiameterEstimate:
    """Randomized variant: 3 scans per iteration, coin-flip restart.

    Here q is the plain midpoint of p and f(p). After each iteration a
    fair coin decides whether to continue from f(p) or from f2(q).
    The d(q, f(q)) candidate is always dominated by d(f(q), f2(q))
    (f2(q) maximizes distance from f(q) over the set, which contains
    both p and f(p), and q lies between them), so updating with the
    latter alone yields the same estimate while keeping the witness a
    genuine member pair.
    """
    if point_set.n < 2:
        raise ValueError("randomized_approx needs at least two points")
    _check_start(point_set, cfg.start_index)
    rng = np.random.default_rng(cfg.seed)
    counter = EvalCounter()
    scans = 0
    d_max = 0.0
    witness = (cfg.start_index, cfg.start_index)
    p_idx = cfg.start_index
    for _ in range(cfg.t):
        p = point_set.coords[p_idx]
        first = farthest(point_set, p, counter)
        scans += 1
        r_p = first.dist
        if r_p == 0.0:
            break
        if r_p > d_max:
            d_max, witness = r_p, (p_idx, first.index)
        fp = point_set.coords[first.index]
        q = 0.5 * (p + fp)
        third = farthest(point_set, q, counter)
        scans += 1
        fourth = farthest(point_set, point_set.coords[third.index], counter)
        scans += 1
        if fourth.dist > d_max:
            d_max, witness = fourth.dist, (third.index, fourth.index)
        if rng.random() < 0.5:
            p_idx = first.index
        else:
            p_idx = fourth.index
    return DiameterEstimate(
        lower=d_max,
        witness=witness,
        scans=scans,
        distance_evaluations=counter.distance_evaluations,
    )

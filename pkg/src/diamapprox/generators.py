"""Seeded synthetic point-set distributions, plus the five-point set on
which the planar four-scan estimate is tight.

All sampling goes through one `numpy` Generator stream per spec, so a
given (kind, n, m, axes, seed) always reproduces the same coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .pointset import PointSet

CUBE = "cube"
BALL = "ball"
SPHERE = "sphere"
ELLIPSOID = "ellipsoid"
ELLIPSOID_ROTATED = "ellipsoid_rotated"
ELLIPSOID_REGULAR = "ellipsoid_regular"
WORST_CASE_5 = "worst_case_5"

KINDS = (
    CUBE,
    BALL,
    SPHERE,
    ELLIPSOID,
    ELLIPSOID_ROTATED,
    ELLIPSOID_REGULAR,
    WORST_CASE_5,
)


@dataclass(frozen=True)
class GeneratorSpec:
    """Distribution kind, size, dimension, optional semi-axes, seed."""

    kind: str
    n: int
    m: int
    axes: Optional[Tuple[float, ...]] = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown distribution kind {self.kind!r}")
        if self.kind == WORST_CASE_5:
            # This construction is a fixed planar five-point set.
            object.__setattr__(self, "n", 5)
            object.__setattr__(self, "m", 2)
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.axes is not None:
            axes = tuple(float(a) for a in self.axes)
            if len(axes) != self.m:
                raise ValueError(
                    f"axes has {len(axes)} entries, expected m={self.m}"
                )
            if any(a <= 0.0 for a in axes):
                raise ValueError("all semi-axes must be > 0")
            object.__setattr__(self, "axes", axes)


def default_ellipsoid_axes(m: int) -> Tuple[float, ...]:
    """Default semi-axes (1 + 1/m, 1 + 2/m, ..., 2): all distinct, the
    longest axis is twice the unit sphere radius."""
    return tuple(1.0 + (i + 1) / m for i in range(m))


def _sphere_points(rng: np.random.Generator, n: int, m: int) -> np.ndarray:
    """Uniform directions: normalized standard normals. Zero vectors
    (probability ~0) are redrawn to keep the stream deterministic."""
    g = rng.standard_normal((n, m))
    norms = np.linalg.norm(g, axis=1)
    while (norms == 0.0).any():
        bad = norms == 0.0
        g[bad] = rng.standard_normal((int(bad.sum()), m))
        norms = np.linalg.norm(g, axis=1)
    return g / norms[:, None]


def _rotation_matrix(rng: np.random.Generator, m: int) -> np.ndarray:
    """Uniform random rotation: QR of a Gaussian matrix, sign-fixed,
    with determinant forced to +1."""
    q, r = np.linalg.qr(rng.standard_normal((m, m)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0.0:
        q[:, 0] = -q[:, 0]
    return q


def worst_case_five_points() -> PointSet:
    """The planar five-point set attaining the C_STAR worst-case ratio.

    Row order is part of the contract: with lowest-index tie-breaking,
    a sweep started from row 0 reproduces the worst case. Rows 3 and 4
    form the unique diameter pair, at distance sqrt(5 - 2*sqrt(3)).
    """
    x = (1.0 - math.sqrt(3.0)) / 2.0  # negative
    y = 0.5
    return PointSet(
        [
            [-0.5, 0.0],
            [0.5, 0.0],
            [-x, y],
            [-x, -y],
            [x, y],
        ]
    )


def generate(spec: GeneratorSpec) -> PointSet:
    """Sample a point set according to `spec` (deterministic per seed)."""
    if spec.kind == WORST_CASE_5:
        return worst_case_five_points()
    rng = np.random.default_rng(spec.seed)
    n, m = spec.n, spec.m
    if spec.kind == CUBE:
        return PointSet(rng.random((n, m)))
    if spec.kind == BALL:
        dirs = _sphere_points(rng, n, m)
        radii = rng.random(n) ** (1.0 / m)
        return PointSet(dirs * radii[:, None])
    if spec.kind == SPHERE:
        return PointSet(_sphere_points(rng, n, m))

    if spec.kind == ELLIPSOID_REGULAR:
        axes = np.array((1.0,) * (m - 1) + (2.0,)) if m > 1 else np.array([2.0])
    elif spec.axes is not None:
        axes = np.array(spec.axes)
    else:
        axes = np.array(default_ellipsoid_axes(m))
    points = _sphere_points(rng, n, m) * axes
    if spec.kind == ELLIPSOID_ROTATED:
        points = points @ _rotation_matrix(rng, m).T
    return PointSet(points)

"""Point-set container and the linear farthest-point scan.

Everything else in the package is built on `farthest`: a single O(m*n)
pass that finds the point of a set farthest from a query point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np


class PointSet:
    """Immutable set of n points in dimension m.

    Coordinates are stored as a contiguous float64 array, one row per
    point. The array is validated (finite values only) and frozen at
    construction, so instances are safe to share between threads and
    between concurrent queries.
    """

    __slots__ = ("coords",)

    def __init__(self, coords) -> None:
        arr = np.array(coords, dtype=np.float64, order="C", copy=True)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-D array of points, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(
                f"need at least one point and one dimension, got shape {arr.shape}"
            )
        if not np.isfinite(arr).all():
            raise ValueError("coordinates must be finite (no NaN or infinity)")
        arr.flags.writeable = False
        self.coords = arr

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def m(self) -> int:
        return self.coords.shape[1]

    def __len__(self) -> int:
        return self.n

    def point(self, i: int) -> np.ndarray:
        return self.coords[i]

    def __repr__(self) -> str:
        return f"PointSet(n={self.n}, m={self.m})"


@dataclass
class EvalCounter:
    """Counts full m-coordinate distance evaluations done by scans.

    Each farthest-point scan over a set of n points adds exactly n.
    """

    distance_evaluations: int = 0

    def add(self, k: int) -> None:
        self.distance_evaluations += k


class FarthestResult(NamedTuple):
    index: int
    dist: float


def distance(a, b) -> float:
    """Euclidean distance between two points of equal dimension."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 1 or a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return math.sqrt(float(((a - b) ** 2).sum()))


def farthest(
    point_set: PointSet, query, counter: Optional[EvalCounter] = None
) -> FarthestResult:
    """Farthest point of `point_set` from `query` (one linear scan).

    The query need not be a member of the set. Comparison is done on
    squared distances; the square root is taken once on the winner.
    Exact ties are broken toward the lowest index, which makes the scan
    deterministic regardless of any internal vectorization.
    """
    q = np.asarray(query, dtype=np.float64)
    if q.shape != (point_set.m,):
        raise ValueError(
            f"query has shape {q.shape}, expected ({point_set.m},)"
        )
    d2 = ((point_set.coords - q) ** 2).sum(axis=1)
    idx = int(np.argmax(d2))  # first occurrence of the max -> lowest index
    if counter is not None:
        counter.add(point_set.n)
    return FarthestResult(idx, math.sqrt(float(d2[idx])))

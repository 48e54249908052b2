"""Shared helpers for the test suite."""

import numpy as np


def squared_distance_matrix(coords: np.ndarray) -> np.ndarray:
    """Dense n x n matrix of squared pairwise distances (small n only)."""
    diff = coords[:, None, :] - coords[None, :, :]
    return (diff**2).sum(axis=-1)


def exhaustive_diameter(coords: np.ndarray) -> float:
    """Independent oracle: plain max over the dense pair matrix."""
    return float(np.sqrt(squared_distance_matrix(coords).max()))

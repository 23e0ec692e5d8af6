"""Input coercion shared by the estimators and the CLI."""
from __future__ import annotations

import numpy as np

from .graph import DistanceMatrix, EdgeListGraph, GraphValidationError, check_zero_diagonal, matrix_from_edges


def check_distance_matrix(X) -> DistanceMatrix:
    """Coerce ``X`` into a validated :class:`DistanceMatrix`.

    Accepts a DistanceMatrix, an EdgeListGraph, nested lists (``math.inf``
    or ``None`` for no edge) or a square numeric array (``np.inf`` for no
    edge). The diagonal must be zero.
    """
    if isinstance(X, DistanceMatrix):
        m = X
    elif isinstance(X, EdgeListGraph):
        m = matrix_from_edges(X)
    elif isinstance(X, np.ndarray):
        m = DistanceMatrix.from_array(X)
    elif isinstance(X, (list, tuple)):
        m = DistanceMatrix.from_rows(X)
    else:
        raise GraphValidationError(f"cannot interpret {type(X).__name__} as a graph")
    check_zero_diagonal(m)
    return m


def check_vertex_pairs(pairs, n: int) -> np.ndarray:
    """Validate an ``(k, 2)`` array of 0-based ``(src, dst)`` pairs."""
    arr = np.asarray(pairs, dtype=np.int64)
    if arr.ndim == 1 and arr.shape[0] == 2:
        arr = arr[np.newaxis, :]
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected pairs of shape (k, 2), got {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise ValueError(f"vertex id out of range 0..{n - 1}")
    return arr

"""Estimator-style wrappers around the solvers.

``fit(X)`` solves all-pairs shortest paths for the graph ``X`` and stores
``dist_matrix_`` plus run counters. ``transform(X)`` returns the distance
matrix of ``X`` as a float array with ``inf`` for unreachable pairs, so the
solvers drop into scikit-learn pipelines (for example to build a
precomputed metric). ``predict(pairs)`` looks up fitted distances.

>>> from apsp import ImprovedFloydWarshall
>>> est = ImprovedFloydWarshall().fit([[0, 2, None], [None, 0, 3], [1, None, 0]])
>>> est.dist_matrix_[0, 2]
5
>>> est.stats_.attempts_total
7
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .baselines import AdjacencyListGraph, NegativeCycleError, OpCounters, dijkstra_apsp, johnson
from .floyd import OrderingStrategy, detect_negative_cycle, fw_classic, fw_improved
from .graph import DistanceMatrix
from .validation import check_distance_matrix, check_vertex_pairs


class _APSPBase(TransformerMixin, BaseEstimator):

    def _solve(self, m: DistanceMatrix):
        raise NotImplementedError

    def fit(self, X, y=None):
        m = check_distance_matrix(X)
        self.dist_matrix_, self.stats_ = self._solve(m)
        self.n_vertices_ = m.n
        return self

    def transform(self, X):
        dist, _ = self._solve(check_distance_matrix(X))
        return dist.to_float_array()

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X).dist_matrix_.to_float_array()

    def predict(self, pairs):
        """Distances for 0-based ``(src, dst)`` pairs; ``inf`` if unreachable."""
        check_is_fitted(self, "dist_matrix_")
        p = check_vertex_pairs(pairs, self.n_vertices_)
        return self.dist_matrix_.to_float_array()[p[:, 0], p[:, 1]]


class _FloydBase(_APSPBase):

    def _finish(self, dist, stats):
        if self.check_negative_cycles:
            v = detect_negative_cycle(dist)
            if v is not None:
                raise NegativeCycleError(v)
        return dist, stats


class FloydWarshall(_FloydBase):
    """Classic triple-loop Floyd-Warshall."""

    def __init__(self, check_negative_cycles: bool = True):
        self.check_negative_cycles = check_negative_cycles

    def _solve(self, m):
        return self._finish(*fw_classic(m))


class ImprovedFloydWarshall(_FloydBase):
    """Floyd-Warshall restricted to finite in/out neighbours.

    Parameters
    ----------
    ordering : {"minprod", "natural"}
        ``"minprod"`` processes next the vertex with the fewest
        ``in * out`` neighbour pairs; ``"natural"`` uses id order.
    check_negative_cycles : bool
        Raise :class:`NegativeCycleError` if the result has a negative
        diagonal entry.
    """

    def __init__(self, ordering: str = "minprod", check_negative_cycles: bool = True):
        self.ordering = ordering
        self.check_negative_cycles = check_negative_cycles

    def _solve(self, m):
        return self._finish(*fw_improved(m, OrderingStrategy(self.ordering)))


class DijkstraAPSP(_APSPBase):
    """Binary-heap Dijkstra from every source; non-negative weights only."""

    def __init__(self, n_jobs: int = 1):
        self.n_jobs = n_jobs

    def _solve(self, m):
        counters = OpCounters()
        dist = dijkstra_apsp(AdjacencyListGraph.from_matrix(m), counters, n_jobs=self.n_jobs)
        return dist, counters


class Johnson(_APSPBase):
    """Bellman-Ford reweighting followed by Dijkstra from every source."""

    def __init__(self, n_jobs: int = 1):
        self.n_jobs = n_jobs

    def _solve(self, m):
        counters = OpCounters()
        dist = johnson(AdjacencyListGraph.from_matrix(m), counters, n_jobs=self.n_jobs)
        return dist, counters

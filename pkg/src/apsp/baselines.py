"""Dijkstra (binary heap, decrease-key), Bellman-Ford and Johnson."""
from __future__ import annotations

import copy
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .graph import INF_CODE, DistanceMatrix, EdgeListGraph, Weight, INF


class NegativeEdgeError(ValueError):
    """Dijkstra was given an edge with negative weight."""

    def __init__(self, src: int, dst: int, weight: int):
        super().__init__(f"negative edge {src + 1} -> {dst + 1} (w={weight}); Dijkstra needs w >= 0")
        self.edge = (src, dst, weight)


class NegativeCycleError(ValueError):
    """A negative-weight cycle makes shortest distances undefined."""

    def __init__(self, vertex: int):
        super().__init__(f"negative cycle through vertex {vertex + 1}")
        self.vertex = vertex


@dataclass
class OpCounters:
    heap_pushes: int = 0
    heap_pops: int = 0
    decrease_keys: int = 0
    edge_scans: int = 0
    bf_edge_scans: int = 0
    bf_relaxations: int = 0

    @property
    def total(self) -> int:
        return (self.heap_pushes + self.heap_pops + self.decrease_keys
                + self.edge_scans + self.bf_edge_scans)

    def add_dijkstra(self, c: np.ndarray) -> None:
        self.heap_pushes += int(c[0])
        self.heap_pops += int(c[1])
        self.decrease_keys += int(c[2])
        self.edge_scans += int(c[3])


class AdjacencyListGraph:
    """Out-adjacency in CSR form: neighbours of ``u`` are
    ``indices[indptr[u]:indptr[u+1]]`` with matching ``weights``."""

    def __init__(self, n: int, src: np.ndarray, dst: np.ndarray, w: np.ndarray):
        self.n = n
        order = np.argsort(src, kind="stable")
        self.src = np.ascontiguousarray(src[order], dtype=np.int64)
        self.indices = np.ascontiguousarray(dst[order], dtype=np.int64)
        self.weights = np.ascontiguousarray(w[order], dtype=np.int64)
        self.indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(self.src, minlength=n), out=self.indptr[1:])

    @classmethod
    def from_edges(cls, g: EdgeListGraph) -> "AdjacencyListGraph":
        return cls(g.n, *g.as_arrays())

    @classmethod
    def from_matrix(cls, m: DistanceMatrix) -> "AdjacencyListGraph":
        mask = m.finite_mask().copy()
        np.fill_diagonal(mask, False)
        us, vs = np.nonzero(mask)
        return cls(m.n, us.astype(np.int64), vs.astype(np.int64), m.cells[us, vs])

    @property
    def m(self) -> int:
        return len(self.indices)

    def with_weights(self, weights: np.ndarray) -> "AdjacencyListGraph":
        """Same structure, new weights (given in CSR order)."""
        new = copy.copy(self)
        new.weights = np.ascontiguousarray(weights, dtype=np.int64)
        return new

    def out(self, u: int) -> list[tuple[int, int]]:
        lo, hi = self.indptr[u], self.indptr[u + 1]
        return list(zip(self.indices[lo:hi].tolist(), self.weights[lo:hi].tolist()))


@dataclass
class SsspResult:
    source: int
    dist: list[Weight]
    settled_order: list[int] = field(default_factory=list, repr=False)


@dataclass
class Potentials:
    h: np.ndarray


def _check_source(g: AdjacencyListGraph, source: int) -> None:
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")


def _check_nonnegative(g: AdjacencyListGraph) -> None:
    neg = np.flatnonzero(g.weights < 0)
    if len(neg):
        e = int(neg[0])
        raise NegativeEdgeError(int(g.src[e]), int(g.indices[e]), int(g.weights[e]))


def _to_weights(arr: np.ndarray) -> list[Weight]:
    return [INF if v == INF_CODE else v for v in arr.tolist()]


def dijkstra_sssp(g: AdjacencyListGraph, source: int,
                  counters: OpCounters | None = None) -> SsspResult:
    _check_source(g, source)
    _check_nonnegative(g)
    dist = np.empty(g.n, dtype=np.int64)
    settled = np.empty(g.n, dtype=np.int64)
    c = np.zeros(4, dtype=np.int64)
    _kernels.dijkstra(g.indptr, g.indices, g.weights, source, dist, settled, c)
    if counters is not None:
        counters.add_dijkstra(c)
    return SsspResult(source, _to_weights(dist), settled[settled >= 0].tolist())


def _dijkstra_matrix(g: AdjacencyListGraph, counters: OpCounters | None, n_jobs: int) -> np.ndarray:
    out = np.empty((g.n, g.n), dtype=np.int64)
    sources = np.arange(g.n, dtype=np.int64)
    if n_jobs <= 1 or g.n < 2:
        c = np.zeros(4, dtype=np.int64)
        _kernels.dijkstra_rows(g.indptr, g.indices, g.weights, sources, out, c)
        chunk_counters = [c]
    else:
        chunks = np.array_split(sources, n_jobs)
        chunk_counters = [np.zeros(4, dtype=np.int64) for _ in chunks]
        # rows are disjoint per chunk; the kernel releases the GIL
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            list(pool.map(
                lambda sc: _kernels.dijkstra_rows(g.indptr, g.indices, g.weights, sc[0], out, sc[1]),
                zip(chunks, chunk_counters)))
    if counters is not None:
        for c in chunk_counters:
            counters.add_dijkstra(c)
    return out


def dijkstra_apsp(g: AdjacencyListGraph, counters: OpCounters | None = None,
                  n_jobs: int = 1) -> DistanceMatrix:
    """Dijkstra from every source; row ``i`` is the run from vertex ``i``."""
    _check_nonnegative(g)
    return DistanceMatrix(_dijkstra_matrix(g, counters, n_jobs))


def bellman_ford(g: AdjacencyListGraph, source: int,
                 counters: OpCounters | None = None) -> SsspResult:
    """Single-source distances allowing negative edges.

    Raises NegativeCycleError carrying a vertex on the cycle when a negative
    cycle is reachable from ``source``.
    """
    _check_source(g, source)
    dist = np.empty(g.n, dtype=np.int64)
    c = np.zeros(2, dtype=np.int64)
    witness = _kernels.bellman_ford(g.n, g.src, g.indices, g.weights, source, dist, c)
    if counters is not None:
        counters.bf_edge_scans += int(c[0])
        counters.bf_relaxations += int(c[1])
    if witness >= 0:
        raise NegativeCycleError(int(witness))
    return SsspResult(source, _to_weights(dist))


def johnson_potentials(g: AdjacencyListGraph, counters: OpCounters | None = None) -> Potentials:
    """Bellman-Ford from a virtual source (vertex ``n``) tied to every vertex by a 0 edge."""
    n = g.n
    src = np.concatenate([g.src, np.full(n, n, dtype=np.int64)])
    dst = np.concatenate([g.indices, np.arange(n, dtype=np.int64)])
    w = np.concatenate([g.weights, np.zeros(n, dtype=np.int64)])
    augmented = AdjacencyListGraph(n + 1, src, dst, w)
    res = bellman_ford(augmented, n, counters)
    return Potentials(np.asarray(res.dist[:n], dtype=np.int64))


def johnson(g: AdjacencyListGraph, counters: OpCounters | None = None,
            n_jobs: int = 1) -> DistanceMatrix:
    """Reweight with Bellman-Ford potentials, then Dijkstra from every vertex."""
    h = johnson_potentials(g, counters).h
    reweighted = g.weights + h[g.src] - h[g.indices]
    if np.any(reweighted < 0):
        raise RuntimeError("reweighting produced a negative edge; potentials are wrong")
    d = _dijkstra_matrix(g.with_weights(reweighted), counters, n_jobs)
    finite = d != INF_CODE
    shift = h[np.newaxis, :] - h[:, np.newaxis]
    d[finite] += shift[finite]
    return DistanceMatrix(d)

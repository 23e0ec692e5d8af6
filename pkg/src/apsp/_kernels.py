"""Compiled inner loops. Everything here works on plain int64 arrays.

``INF`` below is the reserved infinity code; it is tested before every
addition and never summed.
"""
import numpy as np
from numba import njit

INF = np.iinfo(np.int64).max

_jit = njit(cache=True, nogil=True)


@_jit
def fw_classic(a, snapshots):
    """Triple loop over (k, i, j); every triple is one relaxation attempt."""
    n = a.shape[0]
    attempts = np.zeros(n, np.int64)
    successes = np.zeros(n, np.int64)
    useless = 0
    for k in range(n):
        for i in range(n):
            for j in range(n):
                attempts[k] += 1
                aik = a[i, k]
                akj = a[k, j]
                if aik == INF or akj == INF:
                    useless += 1
                    continue
                s = aik + akj
                if s < a[i, j]:
                    a[i, j] = s
                    successes[k] += 1
        if snapshots.shape[0] > 0:
            snapshots[k, :, :] = a
    return attempts, successes, useless


@_jit
def fw_improved(a, minprod, snapshots):
    """Relax only through current in/out neighbours of the processed vertex.

    Returns per-iteration counters, the processing order, list sizes of the
    processed vertex at the start and end of its iteration, and the final
    neighbour lists.
    """
    n = a.shape[0]
    in_list = np.empty((n, n), np.int32)
    out_list = np.empty((n, n), np.int32)
    in_count = np.zeros(n, np.int64)
    out_count = np.zeros(n, np.int64)
    for i in range(n):
        for j in range(n):
            if i != j and a[i, j] != INF:
                out_list[i, out_count[i]] = j
                out_count[i] += 1
                in_list[j, in_count[j]] = i
                in_count[j] += 1

    done = np.zeros(n, np.bool_)
    order = np.empty(n, np.int64)
    attempts = np.zeros(n, np.int64)
    successes = np.zeros(n, np.int64)
    sizes = np.empty((n, 4), np.int64)
    useless = 0
    for t in range(n):
        if minprod:
            k = -1
            best = np.iinfo(np.int64).max
            # strict "<" scan from 0: ties go to the lowest id
            for v in range(n):
                if not done[v]:
                    p = in_count[v] * out_count[v]
                    if p < best:
                        best = p
                        k = v
        else:
            k = t
        done[k] = True
        order[t] = k
        n_in = in_count[k]
        n_out = out_count[k]
        sizes[t, 0] = n_in
        sizes[t, 1] = n_out
        for ii in range(n_in):
            i = in_list[k, ii]
            for jj in range(n_out):
                j = out_list[k, jj]
                attempts[t] += 1
                aik = a[i, k]
                akj = a[k, j]
                if aik == INF or akj == INF:
                    useless += 1
                    continue
                s = aik + akj
                if s < a[i, j]:
                    if a[i, j] == INF:
                        out_list[i, out_count[i]] = j
                        out_count[i] += 1
                        in_list[j, in_count[j]] = i
                        in_count[j] += 1
                    a[i, j] = s
                    successes[t] += 1
        sizes[t, 2] = in_count[k]
        sizes[t, 3] = out_count[k]
        if snapshots.shape[0] > 0:
            snapshots[t, :, :] = a
    return (attempts, successes, useless, order, sizes,
            in_list, in_count, out_list, out_count)


@_jit
def _sift_up(heap, pos, dist, idx):
    v = heap[idx]
    key = dist[v]
    while idx > 0:
        parent = (idx - 1) >> 1
        p = heap[parent]
        if dist[p] <= key:
            break
        heap[idx] = p
        pos[p] = idx
        idx = parent
    heap[idx] = v
    pos[v] = idx


@_jit
def _sift_down(heap, pos, dist, idx, size):
    v = heap[idx]
    key = dist[v]
    while True:
        child = 2 * idx + 1
        if child >= size:
            break
        right = child + 1
        if right < size and dist[heap[right]] < dist[heap[child]]:
            child = right
        c = heap[child]
        if dist[c] >= key:
            break
        heap[idx] = c
        pos[c] = idx
        idx = child
    heap[idx] = v
    pos[v] = idx


@_jit
def dijkstra(indptr, indices, weights, source, dist, settled, counters):
    """Binary-heap Dijkstra with decrease-key through a position map.

    ``counters`` accumulates [pushes, pops, decrease_keys, edge_scans].
    ``settled`` receives vertices in extraction order (-1 past the end).
    """
    n = dist.shape[0]
    dist[:] = INF
    settled[:] = -1
    heap = np.empty(n, np.int64)
    pos = np.full(n, -1, np.int64)
    done = np.zeros(n, np.bool_)
    dist[source] = 0
    heap[0] = source
    pos[source] = 0
    size = 1
    counters[0] += 1
    n_settled = 0
    while size > 0:
        u = heap[0]
        size -= 1
        if size > 0:
            heap[0] = heap[size]
            pos[heap[0]] = 0
            _sift_down(heap, pos, dist, 0, size)
        pos[u] = -1
        counters[1] += 1
        done[u] = True
        settled[n_settled] = u
        n_settled += 1
        du = dist[u]
        for e in range(indptr[u], indptr[u + 1]):
            v = indices[e]
            counters[3] += 1
            if done[v]:
                continue
            nd = du + weights[e]
            if nd < dist[v]:
                fresh = dist[v] == INF
                dist[v] = nd
                if fresh:
                    heap[size] = v
                    pos[v] = size
                    size += 1
                    _sift_up(heap, pos, dist, size - 1)
                    counters[0] += 1
                else:
                    _sift_up(heap, pos, dist, pos[v])
                    counters[2] += 1


@_jit
def dijkstra_rows(indptr, indices, weights, sources, out, counters):
    n = out.shape[1]
    dist = np.empty(n, np.int64)
    settled = np.empty(n, np.int64)
    for r in range(sources.shape[0]):
        dijkstra(indptr, indices, weights, sources[r], dist, settled, counters)
        out[sources[r], :] = dist


@_jit
def bellman_ford(n, src, dst, w, source, dist, counters):
    """n-1 full rounds over the edge array, then one detection round.

    Returns -1, or a vertex on a negative cycle reachable from ``source``.
    ``counters`` accumulates [edge_scans, relaxations].
    """
    pred = np.full(n, -1, np.int64)
    dist[:] = INF
    dist[source] = 0
    m = src.shape[0]
    for _ in range(n - 1):
        for e in range(m):
            u = src[e]
            counters[0] += 1
            if dist[u] == INF:
                continue
            nd = dist[u] + w[e]
            if nd < dist[dst[e]]:
                dist[dst[e]] = nd
                pred[dst[e]] = u
                counters[1] += 1
    for e in range(m):
        u = src[e]
        counters[0] += 1
        if dist[u] == INF:
            continue
        v = dst[e]
        if dist[u] + w[e] < dist[v]:
            pred[v] = u
            # n predecessor steps from a still-relaxable vertex land on the cycle
            x = v
            for _ in range(n):
                x = pred[x]
            return x
    return -1

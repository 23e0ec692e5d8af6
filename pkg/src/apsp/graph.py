"""Weights, graph containers and conversions between them.

Distances are stored as ``int64`` arrays. Infinity is kept in a reserved
code (``INF_CODE``) that never takes part in arithmetic: every kernel checks
for it before adding, so a finite sum can never be mistaken for "no path".
At the Python level the same value is exposed as :data:`INF` (``math.inf``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

Weight = Union[int, float]

INF: float = math.inf
INF_CODE: int = int(np.iinfo(np.int64).max)
#: Largest absolute finite weight accepted on load.
MAX_ABS_WEIGHT: int = 2 ** 40


class GraphValidationError(ValueError):
    """Raised when a graph violates a structural invariant."""


def is_inf(w: Weight) -> bool:
    return isinstance(w, float) and math.isinf(w) and w > 0


def weight_add(a: Weight, b: Weight) -> Weight:
    """Add two extended-integer weights; infinity absorbs."""
    if is_inf(a) or is_inf(b):
        return INF
    return int(a) + int(b)


def _check_finite_weight(w, where: str) -> int:
    if isinstance(w, (float, np.floating)):
        if not math.isfinite(w) or w != int(w):
            raise GraphValidationError(f"{where}: weight {w!r} is not a finite integer")
        w = int(w)
    w = int(w)
    if abs(w) > MAX_ABS_WEIGHT:
        raise GraphValidationError(f"{where}: |weight| {w} exceeds 2**40")
    return w


class DistanceMatrix:
    """Dense ``n x n`` matrix of extended-integer weights.

    The backing array is read-only; algorithms copy it before working.
    """

    __slots__ = ("_cells",)

    def __init__(self, cells: np.ndarray):
        cells = np.array(cells, dtype=np.int64, copy=True)
        if cells.ndim != 2 or cells.shape[0] != cells.shape[1] or cells.shape[0] < 1:
            raise GraphValidationError(f"expected a non-empty square matrix, got shape {cells.shape}")
        cells.setflags(write=False)
        self._cells = cells

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Weight | None]]) -> "DistanceMatrix":
        """Build from nested rows; ``math.inf`` or ``None`` mean no edge."""
        n = len(rows)
        out = np.empty((n, n), dtype=np.int64)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise GraphValidationError(f"row {i} has {len(row)} entries, expected {n}")
            for j, w in enumerate(row):
                if w is None or is_inf(w):
                    out[i, j] = INF_CODE
                else:
                    out[i, j] = _check_finite_weight(w, f"cell ({i}, {j})")
        return cls(out)

    @classmethod
    def from_array(cls, arr) -> "DistanceMatrix":
        """Build from a numeric array where ``np.inf`` marks a missing edge."""
        a = np.asarray(arr)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphValidationError(f"expected a square matrix, got shape {a.shape}")
        if a.dtype.kind == "f":
            if np.any(np.isnan(a)) or np.any(np.isneginf(a)):
                raise GraphValidationError("matrix contains NaN or -inf")
            finite = np.isfinite(a)
            if np.any(a[finite] != np.round(a[finite])):
                raise GraphValidationError("matrix contains non-integer weights")
            out = np.full(a.shape, INF_CODE, dtype=np.int64)
            out[finite] = a[finite].astype(np.int64)
        elif a.dtype.kind in "iu":
            out = a.astype(np.int64)
        else:
            raise GraphValidationError(f"unsupported dtype {a.dtype}")
        finite = out != INF_CODE
        if np.any(np.abs(out[finite]) > MAX_ABS_WEIGHT):
            raise GraphValidationError("|weight| exceeds 2**40")
        return cls(out)

    @property
    def n(self) -> int:
        return self._cells.shape[0]

    @property
    def cells(self) -> np.ndarray:
        """Read-only int64 view; ``INF_CODE`` marks infinity."""
        return self._cells

    def __getitem__(self, ij) -> Weight:
        v = int(self._cells[ij])
        return INF if v == INF_CODE else v

    def finite_mask(self) -> np.ndarray:
        return self._cells != INF_CODE

    def to_list(self) -> list[list[Weight]]:
        return [[INF if v == INF_CODE else int(v) for v in row] for row in self._cells.tolist()]

    def to_float_array(self) -> np.ndarray:
        out = self._cells.astype(np.float64)
        out[self._cells == INF_CODE] = np.inf
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self._cells.shape == other._cells.shape and bool(np.array_equal(self._cells, other._cells))

    def __hash__(self):
        return hash(self._cells.tobytes())

    def __repr__(self) -> str:
        rows = ["[" + ", ".join("inf" if v == INF_CODE else str(v) for v in row) + "]"
                for row in self._cells.tolist()]
        return f"DistanceMatrix(n={self.n}, [{', '.join(rows)}])"


@dataclass(frozen=True)
class EdgeListGraph:
    """Vertex count plus directed weighted edges ``(src, dst, w)``, 0-based."""

    n: int
    edges: tuple[tuple[int, int, int], ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise GraphValidationError(f"vertex count must be >= 1, got {self.n}")
        seen = set()
        clean = []
        for idx, e in enumerate(self.edges):
            u, v, w = e
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphValidationError(f"edge {idx}: vertex out of range ({u}, {v})")
            if u == v:
                raise GraphValidationError(f"edge {idx}: self-loop on vertex {u}")
            if (u, v) in seen:
                raise GraphValidationError(f"edge {idx}: duplicate edge ({u}, {v})")
            seen.add((u, v))
            clean.append((u, v, _check_finite_weight(w, f"edge {idx}")))
        object.__setattr__(self, "edges", tuple(clean))

    @property
    def m(self) -> int:
        return len(self.edges)

    def as_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if not self.edges:
            z = np.zeros(0, dtype=np.int64)
            return z, z.copy(), z.copy()
        arr = np.asarray(self.edges, dtype=np.int64)
        return arr[:, 0].copy(), arr[:, 1].copy(), arr[:, 2].copy()


class DynAdjacency:
    """Append-only incoming/outgoing neighbour lists.

    ``add(i, j)`` records a finite cell ``i -> j`` in both ``out_lists[i]``
    and ``in_lists[j]``, keeping the two sides mirrored.
    """

    def __init__(self, n: int):
        self.n = n
        self.in_lists: list[list[int]] = [[] for _ in range(n)]
        self.out_lists: list[list[int]] = [[] for _ in range(n)]

    def add(self, i: int, j: int) -> None:
        if i == j:
            raise GraphValidationError(f"self-loop {i} cannot enter the lists")
        if j in self.out_lists[i]:
            raise GraphValidationError(f"duplicate list entry ({i}, {j})")
        self.out_lists[i].append(j)
        self.in_lists[j].append(i)

    def in_degree(self, v: int) -> int:
        return len(self.in_lists[v])

    def out_degree(self, v: int) -> int:
        return len(self.out_lists[v])

    def total_entries(self) -> tuple[int, int]:
        return sum(map(len, self.in_lists)), sum(map(len, self.out_lists))

    def is_mirrored(self) -> bool:
        outs = {(i, j) for i, js in enumerate(self.out_lists) for j in js}
        ins = {(i, j) for j, is_ in enumerate(self.in_lists) for i in is_}
        return outs == ins

    def has_duplicates(self) -> bool:
        return any(len(set(lst)) != len(lst) for lst in self.in_lists + self.out_lists)

    @classmethod
    def from_arrays(cls, in_lists: np.ndarray, in_count: np.ndarray,
                    out_lists: np.ndarray, out_count: np.ndarray) -> "DynAdjacency":
        n = len(in_count)
        adj = cls(n)
        adj.in_lists = [in_lists[v, : in_count[v]].tolist() for v in range(n)]
        adj.out_lists = [out_lists[v, : out_count[v]].tolist() for v in range(n)]
        return adj

    def __repr__(self) -> str:
        return f"DynAdjacency(n={self.n}, in={self.in_lists}, out={self.out_lists})"


def matrix_from_edges(g: EdgeListGraph) -> DistanceMatrix:
    cells = np.full((g.n, g.n), INF_CODE, dtype=np.int64)
    np.fill_diagonal(cells, 0)
    for u, v, w in g.edges:
        cells[u, v] = w
    return DistanceMatrix(cells)


def edges_from_matrix(m: DistanceMatrix) -> EdgeListGraph:
    """Finite off-diagonal cells as an edge list, in row-major order."""
    c = m.cells
    mask = c != INF_CODE
    np.fill_diagonal(mask, False)
    us, vs = np.nonzero(mask)
    return EdgeListGraph(m.n, tuple(zip(us.tolist(), vs.tolist(), c[us, vs].tolist())))


def adjacency_from_matrix(m: DistanceMatrix) -> DynAdjacency:
    """Initial in/out lists: every finite off-diagonal cell, row-major scan.

    A row-major scan appends ``j`` to ``out[i]`` in increasing ``j`` and
    ``i`` to ``in[j]`` in increasing ``i``, so both are read off the mask.
    """
    mask = m.finite_mask().copy()
    np.fill_diagonal(mask, False)
    adj = DynAdjacency(m.n)
    adj.out_lists = [np.flatnonzero(mask[i]).tolist() for i in range(m.n)]
    adj.in_lists = [np.flatnonzero(mask[:, j]).tolist() for j in range(m.n)]
    return adj


def check_zero_diagonal(m: DistanceMatrix) -> None:
    diag = np.diag(m.cells)
    bad = np.nonzero(diag != 0)[0]
    if len(bad):
        raise GraphValidationError(f"diagonal entry for vertex {int(bad[0])} is not zero")


"""Floyd-Warshall, plain and with useless relaxations skipped.

Both functions copy their input and return ``(DistanceMatrix, RelaxStats)``.
A relaxation attempt is one evaluation of ``d[i,k] + d[k,j] < d[i,j]``; it is
*useless* when either operand is infinite, because it can never fire.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .graph import DistanceMatrix, DynAdjacency, check_zero_diagonal


class OrderingStrategy(str, enum.Enum):
    """Order in which the improved algorithm picks intermediate vertices."""

    NATURAL = "natural"
    MIN_IN_OUT_PRODUCT = "minprod"


@dataclass
class RelaxStats:
    """Relaxation counters of one Floyd-Warshall run.

    ``k_order`` holds 0-based vertex ids. ``list_sizes`` (improved variant
    only) has one row per iteration: in/out list sizes of the processed
    vertex at the start and at the end of that iteration.
    """

    attempts_total: int
    successes_total: int
    attempts_per_iteration: list[int]
    successes_per_iteration: list[int]
    k_order: list[int]
    useless_attempts: int
    list_sizes: Optional[np.ndarray] = field(default=None, repr=False)
    snapshots: Optional[np.ndarray] = field(default=None, repr=False)
    _lists: Optional[tuple] = field(default=None, repr=False, compare=False)

    @property
    def final_adjacency(self) -> Optional[DynAdjacency]:
        """In/out lists at termination (improved variant only)."""
        if self._lists is None:
            return None
        return DynAdjacency.from_arrays(*self._lists)

    @property
    def list_totals(self) -> Optional[tuple[int, int]]:
        """Total entries across all in lists and all out lists at termination."""
        if self._lists is None:
            return None
        return int(self._lists[1].sum()), int(self._lists[3].sum())

    def to_record(self, algorithm: str) -> dict:
        """JSON-ready summary with 1-based vertex ids."""
        return {
            "algorithm": algorithm,
            "attempts_total": self.attempts_total,
            "successes_total": self.successes_total,
            "attempts_per_iteration": self.attempts_per_iteration,
            "k_order": [k + 1 for k in self.k_order],
            "useless_attempts": self.useless_attempts,
        }


def _snapshot_buffer(n: int, keep: bool) -> np.ndarray:
    return np.empty((n if keep else 0, n, n), dtype=np.int64)


def fw_classic(m: DistanceMatrix, *, keep_snapshots: bool = False) -> tuple[DistanceMatrix, RelaxStats]:
    """Classic Floyd-Warshall; performs exactly ``n**3`` attempts.

    With ``keep_snapshots`` the matrix after every outer iteration is stored
    in ``stats.snapshots`` (``n`` copies, so only for small inputs).
    """
    check_zero_diagonal(m)
    a = np.array(m.cells, dtype=np.int64, copy=True)
    snaps = _snapshot_buffer(m.n, keep_snapshots)
    attempts, successes, useless = _kernels.fw_classic(a, snaps)
    stats = RelaxStats(
        attempts_total=int(attempts.sum()),
        successes_total=int(successes.sum()),
        attempts_per_iteration=attempts.tolist(),
        successes_per_iteration=successes.tolist(),
        k_order=list(range(m.n)),
        useless_attempts=int(useless),
        snapshots=snaps if keep_snapshots else None,
    )
    return DistanceMatrix(a), stats


def fw_improved(
    m: DistanceMatrix,
    strategy: OrderingStrategy | str = OrderingStrategy.MIN_IN_OUT_PRODUCT,
    *,
    keep_snapshots: bool = False,
) -> tuple[DistanceMatrix, RelaxStats]:
    """Floyd-Warshall that only relaxes through finite in/out neighbours.

    Each vertex keeps append-only lists of the vertices it currently has a
    finite cell to and from. Processing ``k`` tries every pair
    ``(i in in[k], j in out[k])``; when a relaxation turns an infinite cell
    ``(i, j)`` finite, ``j`` is appended to ``out[i]`` and ``i`` to ``in[j]``.

    ``strategy`` picks the next ``k``: ``natural`` goes 0..n-1, ``minprod``
    takes the unprocessed vertex with the smallest ``|in| * |out|``, lowest
    id on ties.
    """
    strategy = OrderingStrategy(strategy)
    check_zero_diagonal(m)
    a = np.array(m.cells, dtype=np.int64, copy=True)
    snaps = _snapshot_buffer(m.n, keep_snapshots)
    (attempts, successes, useless, order, sizes,
     in_list, in_count, out_list, out_count) = _kernels.fw_improved(
        a, strategy is OrderingStrategy.MIN_IN_OUT_PRODUCT, snaps)
    stats = RelaxStats(
        attempts_total=int(attempts.sum()),
        successes_total=int(successes.sum()),
        attempts_per_iteration=attempts.tolist(),
        successes_per_iteration=successes.tolist(),
        k_order=order.tolist(),
        useless_attempts=int(useless),
        list_sizes=sizes,
        _lists=(in_list, in_count, out_list, out_count),
        snapshots=snaps if keep_snapshots else None,
    )
    return DistanceMatrix(a), stats


def detect_negative_cycle(m: DistanceMatrix) -> Optional[int]:
    """Lowest vertex with a negative diagonal entry in a solved matrix."""
    diag = np.diag(m.cells)
    bad = np.flatnonzero(diag < 0)
    return int(bad[0]) if len(bad) else None

"""Seeded uniform random directed graphs G(n, M) over fixed density regimes.

Randomness comes from NumPy's PCG64 bit generator seeded with the integer
seed, so a (spec, seed) pair reproduces the same edge list on any platform
running the same NumPy major version.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import EdgeListGraph

RNG_NAME = "pcg64"


class SpecError(ValueError):
    pass


class Regime(str, enum.Enum):
    """Edge-count families; the value is the CLI spelling."""

    HALF_N = "n-half"
    N = "n"
    TWO_N = "2n"
    FOUR_N = "4n"
    LGN_N = "lgn-n"
    TWO_LGN_N = "2lgn-n"
    FOUR_LGN_N = "4lgn-n"
    N_OVER_LGN_N = "n-over-lgn-n"
    HALF_N_N = "n-half-n"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    Regime.HALF_N: "N/2",
    Regime.N: "N",
    Regime.TWO_N: "2N",
    Regime.FOUR_N: "4N",
    Regime.LGN_N: "lgN.N",
    Regime.TWO_LGN_N: "2lgN.N",
    Regime.FOUR_LGN_N: "4lgN.N",
    Regime.N_OVER_LGN_N: "(N/lgN).N",
    Regime.HALF_N_N: "(N/2).N",
}

ALL_REGIMES: tuple[Regime, ...] = tuple(Regime)


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def regime_edge_count(n: int, regime: Regime | str) -> int:
    """Edge count for ``regime`` at ``n`` vertices, clamped to ``[0, n(n-1)]``.

    ``lg`` is ``ceil(log2 n)``; ``N/lgN`` is rounded up as well.
    """
    regime = Regime(regime)
    if n < 2:
        return 0
    lg = math.ceil(math.log2(n))
    raw = {
        Regime.HALF_N: n / 2,
        Regime.N: n,
        Regime.TWO_N: 2 * n,
        Regime.FOUR_N: 4 * n,
        Regime.LGN_N: lg * n,
        Regime.TWO_LGN_N: 2 * lg * n,
        Regime.FOUR_LGN_N: 4 * lg * n,
        Regime.N_OVER_LGN_N: math.ceil(n / lg) * n,
        Regime.HALF_N_N: (n / 2) * n,
    }[regime]
    return min(max(_round_half_up(raw), 0), n * (n - 1))


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: Optional[int] = None
    regime: Optional[Regime] = None
    weight_min: int = 1
    weight_max: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise SpecError(f"n must be >= 1, got {self.n}")
        if (self.m is None) == (self.regime is None):
            raise SpecError("give exactly one of m or regime")
        if self.regime is not None:
            object.__setattr__(self, "regime", Regime(self.regime))
        if self.weight_min > self.weight_max:
            raise SpecError(f"weight_min {self.weight_min} > weight_max {self.weight_max}")
        cap = self.n * (self.n - 1)
        if self.edge_count > cap:
            raise SpecError(f"M={self.edge_count} exceeds n(n-1)={cap}")
        if self.edge_count < 0:
            raise SpecError(f"M must be >= 0, got {self.edge_count}")

    @property
    def edge_count(self) -> int:
        if self.m is not None:
            return self.m
        return regime_edge_count(self.n, self.regime)

    def header_comment(self) -> str:
        return (f"c gen n={self.n} m={self.edge_count} wmin={self.weight_min} "
                f"wmax={self.weight_max} seed={self.seed}")


def _pair(p: int, n: int) -> tuple[int, int]:
    # pair index over the n(n-1) ordered pairs without the diagonal
    u, r = divmod(p, n - 1)
    return u, (r if r < u else r + 1)


def generate(spec: GenSpec) -> EdgeListGraph:
    """Sample ``M`` distinct ordered pairs uniformly, weights uniform in range.

    Partial Fisher-Yates over the pair indices, with the permuted prefix kept
    in a dict so memory is O(M) rather than O(n^2).
    """
    n, m = spec.n, spec.edge_count
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    total = n * (n - 1)
    if m == 0:
        return EdgeListGraph(n, ())
    picks = rng.integers(np.arange(m), total)
    swapped: dict[int, int] = {}
    chosen = []
    for i, j in enumerate(picks.tolist()):
        vj = swapped.get(j, j)
        swapped[j] = swapped.get(i, i)
        chosen.append(vj)
    weights = rng.integers(spec.weight_min, spec.weight_max, size=m, endpoint=True)
    edges = [(*_pair(p, n), w) for p, w in zip(chosen, weights.tolist())]
    return EdgeListGraph(n, tuple(edges))

"""Cross-checking and timing harness used by the ``verify`` and ``bench`` commands."""
from __future__ import annotations

import csv
import logging
import statistics
import time
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Optional, TextIO

import numpy as np

from .baselines import AdjacencyListGraph, NegativeCycleError, OpCounters, dijkstra_apsp, johnson
from .floyd import OrderingStrategy, detect_negative_cycle, fw_classic, fw_improved
from .generate import ALL_REGIMES, GenSpec, Regime, generate
from .graph import INF, INF_CODE, DistanceMatrix, EdgeListGraph, matrix_from_edges

log = logging.getLogger(__name__)

ALGORITHMS = ("fw", "fw-improved-natural", "fw-improved-minprod", "dijkstra", "johnson")

DISPLAY_NAMES = {
    "fw": "Floyd-Warshall",
    "fw-improved-natural": "Improved FW (natural)",
    "fw-improved-minprod": "Improved FW (min in*out)",
    "dijkstra": "Dijkstra's",
    "johnson": "Johnson's",
}

CSV_FIELDS = ("algorithm", "n", "m", "regime", "trial", "seed", "wall_time_ns", "attempts", "pct_of_fw")


class ConfigError(ValueError):
    pass


def _prepare(algorithm: str, g: EdgeListGraph):
    """Input in the representation the algorithm consumes; built outside the timer."""
    if algorithm.startswith("fw"):
        return matrix_from_edges(g)
    return AdjacencyListGraph.from_edges(g)


def _run(algorithm: str, prepared) -> tuple[DistanceMatrix, int]:
    """Solve once; returns the distances and the work count."""
    if algorithm == "fw":
        dist, stats = fw_classic(prepared)
        return dist, stats.attempts_total
    if algorithm == "fw-improved-natural":
        dist, stats = fw_improved(prepared, OrderingStrategy.NATURAL)
        return dist, stats.attempts_total
    if algorithm == "fw-improved-minprod":
        dist, stats = fw_improved(prepared, OrderingStrategy.MIN_IN_OUT_PRODUCT)
        return dist, stats.attempts_total
    counters = OpCounters()
    if algorithm == "dijkstra":
        dist = dijkstra_apsp(prepared, counters)
    elif algorithm == "johnson":
        dist = johnson(prepared, counters)
    else:
        raise ConfigError(f"unknown algorithm {algorithm!r}")
    return dist, counters.total


# ---------------------------------------------------------------- verify


@dataclass
class Mismatch:
    seed: int
    i: int
    j: int
    values: dict

    def describe(self) -> str:
        vals = ", ".join(f"{k}={'X' if v == INF else v}" for k, v in self.values.items())
        return f"seed {self.seed}: cell ({self.i + 1}, {self.j + 1}) differs: {vals}"


@dataclass
class VerifyReport:
    trials: int = 0
    agreed: int = 0
    negative_cycle_trials: int = 0
    skipped: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)
    counter_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.counter_failures and self.agreed == self.trials

    def summary(self) -> str:
        lines = [f"{self.agreed}/{self.trials} agree"]
        if self.negative_cycle_trials:
            lines.append(f"{self.negative_cycle_trials} trial(s) had a negative cycle, detected by every algorithm")
        lines.extend(f"skipped: {s}" for s in sorted(set(self.skipped)))
        lines.extend(m.describe() for m in self.mismatches[:1])
        lines.extend(self.counter_failures)
        return "\n".join(lines)


def _first_divergence(results: dict[str, DistanceMatrix]) -> Optional[tuple[int, int]]:
    ref = next(iter(results.values())).cells
    for dist in results.values():
        diff = np.argwhere(dist.cells != ref)
        if len(diff):
            return tuple(int(x) for x in diff[0])
    return None


def check_graph(g: EdgeListGraph, seed: int, report: VerifyReport, with_dijkstra: bool) -> None:
    """Run every applicable solver on ``g`` and record agreement in ``report``."""
    report.trials += 1
    m = matrix_from_edges(g)
    classic, _ = fw_classic(m)
    improved = {s: fw_improved(m, s) for s in OrderingStrategy}
    n3 = m.n ** 3
    for s, (dist, stats) in improved.items():
        name = f"fw-improved-{s.value}"
        if stats.useless_attempts != 0:
            report.counter_failures.append(f"seed {seed}: {name} made {stats.useless_attempts} useless attempts")
        if stats.attempts_total > n3:
            report.counter_failures.append(f"seed {seed}: {name} made {stats.attempts_total} > n^3 attempts")
        finite = int(np.count_nonzero(dist.cells != INF_CODE)) - m.n
        if stats.list_totals != (finite, finite) and detect_negative_cycle(dist) is None:
            report.counter_failures.append(
                f"seed {seed}: {name} list sizes {stats.list_totals} != finite off-diagonal cells {finite}")

    cycle_flags = {
        "fw": detect_negative_cycle(classic),
        **{f"fw-improved-{s.value}": detect_negative_cycle(d) for s, (d, _) in improved.items()},
    }
    adj = AdjacencyListGraph.from_edges(g)
    try:
        johnson_dist = johnson(adj)
    except NegativeCycleError:
        johnson_dist = None
    if cycle_flags["fw"] is not None or johnson_dist is None:
        if johnson_dist is None and all(v is not None for v in cycle_flags.values()):
            report.negative_cycle_trials += 1
            report.agreed += 1
        else:
            flags = {k: v is not None for k, v in cycle_flags.items()}
            flags["johnson"] = johnson_dist is None
            report.counter_failures.append(f"seed {seed}: negative-cycle detection disagrees: {flags}")
        return

    results = {"fw": classic, **{f"fw-improved-{s.value}": d for s, (d, _) in improved.items()},
               "johnson": johnson_dist}
    if with_dijkstra:
        results["dijkstra"] = dijkstra_apsp(adj)
    else:
        report.skipped.append("dijkstra (negative weights enabled)")
    cell = _first_divergence(results)
    if cell is None:
        report.agreed += 1
    else:
        i, j = cell
        report.mismatches.append(Mismatch(seed, i, j, {k: d[i, j] for k, d in results.items()}))


def verify(n: int, trials: int, seed_base: int, negative: bool = False,
           regime: Optional[Regime] = None) -> VerifyReport:
    """Cross-check all solvers on ``trials`` seeded graphs.

    Trial ``t`` uses seed ``seed_base + t`` and, unless ``regime`` is fixed,
    cycles through every density regime.
    """
    report = VerifyReport()
    wmin = -10 if negative else 1
    for t in range(trials):
        seed = seed_base + t
        r = regime if regime is not None else ALL_REGIMES[t % len(ALL_REGIMES)]
        g = generate(GenSpec(n=n, regime=r, weight_min=wmin, weight_max=100, seed=seed))
        check_graph(g, seed, report, with_dijkstra=not negative)
    return report


# ---------------------------------------------------------------- bench


@dataclass
class BenchConfig:
    n: int
    regimes: tuple[Regime, ...] = ALL_REGIMES
    trials: int = 10
    algorithms: tuple[str, ...] = ALGORITHMS
    seed_base: int = 0
    include_fw_baseline: bool = True
    weight_min: int = 1
    weight_max: int = 100

    def __post_init__(self):
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if not self.algorithms:
            raise ConfigError("at least one algorithm is required")
        bad = [a for a in self.algorithms if a not in ALGORITHMS]
        if bad:
            raise ConfigError(f"unknown algorithm(s) {bad}; choose from {list(ALGORITHMS)}")
        if self.weight_min < 0 and "dijkstra" in self.algorithms:
            raise ConfigError("dijkstra needs non-negative weights (weight_min >= 0)")
        self.regimes = tuple(Regime(r) for r in self.regimes)


@dataclass
class BenchRecord:
    algorithm: str
    n: int
    m: int
    regime: str
    trial: int
    seed: int
    wall_time_ns: int
    attempts: int
    pct_of_fw: Optional[float] = None


def _timed(algorithm: str, prepared) -> tuple[DistanceMatrix, int, int]:
    _run(algorithm, prepared)  # warm-up, discarded
    t0 = time.perf_counter_ns()
    dist, work = _run(algorithm, prepared)
    elapsed = time.perf_counter_ns() - t0
    return dist, work, max(elapsed, 1)


def run_bench(config: BenchConfig,
              progress: Optional[Callable[[BenchRecord], None]] = None) -> list[BenchRecord]:
    """Time every algorithm on every (regime, trial) graph, sequentially."""
    records = []
    for regime in config.regimes:
        for trial in range(config.trials):
            seed = config.seed_base + trial
            spec = GenSpec(n=config.n, regime=regime, weight_min=config.weight_min,
                           weight_max=config.weight_max, seed=seed)
            g = generate(spec)
            fw_time = None
            measured = {}
            order = list(config.algorithms)
            if config.include_fw_baseline:
                order = ["fw"] + [a for a in order if a != "fw"]
            for algo in order:
                _, work, ns = _timed(algo, _prepare(algo, g))
                measured[algo] = (work, ns)
                if algo == "fw":
                    fw_time = ns
            for algo in config.algorithms:
                work, ns = measured[algo]
                rec = BenchRecord(
                    algorithm=algo, n=config.n, m=g.m, regime=regime.label, trial=trial, seed=seed,
                    wall_time_ns=ns, attempts=work,
                    pct_of_fw=(100.0 * ns / fw_time) if config.include_fw_baseline else None,
                )
                records.append(rec)
                log.debug("%s %s trial=%d m=%d %.3f ms", algo, regime.label, trial, g.m, ns / 1e6)
                if progress is not None:
                    progress(rec)
    return records


def write_csv(records: Iterable[BenchRecord], fh: TextIO) -> None:
    writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        row = asdict(r)
        row["pct_of_fw"] = "" if r.pct_of_fw is None else f"{r.pct_of_fw:.4f}"
        writer.writerow(row)


def summarize(records: Iterable[BenchRecord]) -> dict[tuple[str, str], dict[str, float]]:
    """Per (algorithm, regime label): mean pct_of_fw, wall time and attempts."""
    groups = defaultdict(list)
    for r in records:
        groups[(r.algorithm, r.regime)].append(r)
    out = {}
    for key, rs in groups.items():
        pcts = [r.pct_of_fw for r in rs if r.pct_of_fw is not None]
        out[key] = {
            "pct_of_fw": statistics.fmean(pcts) if pcts else float("nan"),
            "wall_time_ns": statistics.fmean(r.wall_time_ns for r in rs),
            "attempts": statistics.fmean(r.attempts for r in rs),
            "m": statistics.fmean(r.m for r in rs),
            "trials": len(rs),
        }
    return out


def markdown_table(records: list[BenchRecord], config: BenchConfig) -> str:
    """Mean percentage of Floyd-Warshall time, one row per algorithm.

    Percentages are computed per trial and then averaged. Without the FW
    baseline the cells hold mean wall time in milliseconds instead.
    """
    summary = summarize(records)
    labels = [r.label for r in config.regimes]
    header = "| Number of Edges | " + " | ".join(labels) + " |"
    rule = "|---" * (len(labels) + 1) + "|"
    lines = [
        f"n={config.n}, trials={config.trials}, weights=[{config.weight_min}, {config.weight_max}], "
        f"seed_base={config.seed_base}; "
        + ("mean per-trial % of Floyd-Warshall time" if config.include_fw_baseline
           else "mean wall time (ms)"),
        "",
        header,
        rule,
    ]
    for algo in config.algorithms:
        cells = []
        for label in labels:
            s = summary[(algo, label)]
            if config.include_fw_baseline:
                cells.append(f"{s['pct_of_fw']:.1f}%")
            else:
                cells.append(f"{s['wall_time_ns'] / 1e6:.2f}")
        lines.append(f"| {DISPLAY_NAMES[algo]} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


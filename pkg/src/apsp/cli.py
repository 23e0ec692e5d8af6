"""``apsp`` command line: gen, solve, verify, bench.

Exit codes: 0 success, 1 validation or verification failure, 2 usage error.
``APSP_SEED`` in the environment overrides ``--seed-base``.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import bench
from .baselines import AdjacencyListGraph, NegativeCycleError, NegativeEdgeError, OpCounters, dijkstra_apsp, johnson
from .floyd import OrderingStrategy, detect_negative_cycle, fw_classic, fw_improved
from .generate import RNG_NAME, GenSpec, Regime, SpecError, generate
from .graph import GraphValidationError, matrix_from_edges, check_zero_diagonal
from .io import LEGACY_INF, FormatError, format_matrix, read_edges, read_matrix, write_edges


FAILURE = 1
USAGE = 2


def _seed_base(args) -> int:
    env = os.environ.get("APSP_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"APSP_SEED must be an integer, got {env!r}") from None
    return args.seed_base


def cmd_gen(args) -> int:
    try:
        spec = GenSpec(n=args.n, m=args.m, regime=args.regime, weight_min=args.wmin,
                       weight_max=args.wmax, seed=args.seed)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE
    g = generate(spec)
    comments = (spec.header_comment(), f"c rng={RNG_NAME}")
    if args.out == "-":
        write_edges(g, sys.stdout, comments)
    else:
        write_edges(g, args.out, comments)
    print(f"m={g.m} seed={spec.seed}", file=sys.stderr if args.out == "-" else sys.stdout)
    return 0


def _load(args):
    if args.matrix:
        m = read_matrix(args.matrix, legacy_inf=args.legacy_inf)
    else:
        m = matrix_from_edges(read_edges(args.edges))
    check_zero_diagonal(m)
    return m


def cmd_solve(args) -> int:
    try:
        m = _load(args)
    except (OSError, FormatError, GraphValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE
    record = None
    try:
        if args.algo in ("fw", "fw-improved"):
            if args.algo == "fw":
                dist, stats = fw_classic(m)
                name = "fw"
            else:
                order = OrderingStrategy(args.order)
                dist, stats = fw_improved(m, order)
                name = f"fw-improved-{order.value}"
            witness = detect_negative_cycle(dist)
            if witness is not None:
                raise NegativeCycleError(witness)
            record = stats.to_record(name)
        else:
            counters = OpCounters()
            g = AdjacencyListGraph.from_matrix(m)
            dist = dijkstra_apsp(g, counters) if args.algo == "dijkstra" else johnson(g, counters)
            record = {"algorithm": args.algo, "op_count": counters.total, **vars(counters)}
    except (NegativeCycleError, NegativeEdgeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE
    text = format_matrix(dist)
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.stats:
        print(json.dumps(record))
    return 0


def cmd_verify(args) -> int:
    regime = Regime(args.regime) if args.regime else None
    report = bench.verify(args.n, args.trials, _seed_base(args), negative=args.negative, regime=regime)
    print(report.summary())
    return 0 if report.ok else FAILURE


def _csv_list(text: str) -> tuple[str, ...]:
    return tuple(x.strip() for x in text.split(",") if x.strip())


def cmd_bench(args) -> int:
    try:
        config = bench.BenchConfig(
            n=args.n,
            regimes=tuple(Regime(r) for r in _csv_list(args.regimes)),
            trials=args.trials,
            algorithms=_csv_list(args.algorithms),
            seed_base=_seed_base(args),
            include_fw_baseline=not args.no_fw_baseline,
            weight_min=args.wmin,
            weight_max=args.wmax,
        )
    except (bench.ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    records = bench.run_bench(config)
    if args.csv == "-":
        bench.write_csv(records, sys.stdout)
    else:
        with open(args.csv, "w", newline="") as fh:
            bench.write_csv(records, fh)
    table = bench.markdown_table(records, config)
    if args.table:
        with open(args.table, "w") as fh:
            fh.write(table)
    print(table, file=sys.stderr if args.csv == "-" else sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apsp", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    regimes = [r.value for r in Regime]

    p = sub.add_parser("gen", help="write a seeded random graph in edge-list format")
    p.add_argument("--n", type=int, required=True)
    size = p.add_mutually_exclusive_group(required=True)
    size.add_argument("--regime", choices=regimes)
    size.add_argument("--m", type=int)
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="all-pairs shortest paths for one graph")
    p.add_argument("--algo", choices=["fw", "fw-improved", "dijkstra", "johnson"], required=True)
    p.add_argument("--order", choices=[s.value for s in OrderingStrategy], default="minprod")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix", help="matrix file (N then N*N tokens)")
    src.add_argument("--edges", help="edge-list file ('p sp N M' / 'a u v w')")
    p.add_argument("--legacy-inf", type=int, nargs="?", const=LEGACY_INF, default=None,
                   help=f"treat this number as infinity in --matrix input (default {LEGACY_INF})")
    p.add_argument("--out", help="write the matrix here instead of stdout")
    p.add_argument("--stats", action="store_true", help="print a JSON stats record after the matrix")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="cross-check all algorithms on seeded graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed-base", type=int, default=0)
    p.add_argument("--negative", action="store_true", help="weights in [-10, 100]; skips dijkstra")
    p.add_argument("--regime", choices=regimes, help="fix one regime instead of cycling through all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time algorithms against Floyd-Warshall")
    p.add_argument("--n", type=int, default=1024)
    p.add_argument("--regimes", default=",".join(regimes))
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--algorithms", default=",".join(bench.ALGORITHMS))
    p.add_argument("--seed-base", type=int, default=0)
    p.add_argument("--no-fw-baseline", action="store_true")
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=100)
    p.add_argument("--csv", default="-", help="CSV output path, '-' for stdout")
    p.add_argument("--table", help="also write the markdown table here")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

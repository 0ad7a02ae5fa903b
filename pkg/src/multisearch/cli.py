"""Command-line benchmark harness.

Subcommands:
  solve    run one solver on one instance and print a JSON report
  bench    run seeded Monte Carlo trials and write CSV/JSON rows
  scaling  sweep k or n and print the fitted query-count exponent

Exit codes: 0 success, 2 usage error, 3 data error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import (ALGOS, DataError, ExperimentConfig, fit_scaling,
                    run_experiment)
from .model import DomainError
from .walker import ceil_log2

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--n", type=int, required=True, help="range upper bound")
    parser.add_argument("--k", type=int, required=True, help="hidden multiset size")
    parser.add_argument("--delta", type=float, default=0.1,
                        help="target failure probability (walker/naive)")
    parser.add_argument("--rho", type=float, default=1.0,
                        help="per-query comparison correctness, in (1/2, 1]")
    parser.add_argument("--seed", type=int, default=0, help="64-bit master seed")
    parser.add_argument("--algo", choices=ALGOS, default="walker")
    parser.add_argument("--instance", default="uniform",
                        help="uniform | distinct | cluster | bins | file:PATH")
    parser.add_argument("--dense-c", type=float, default=1.0,
                        help="error exponent for the dense solver (error n^-c)")
    parser.add_argument("--faithful-chain-queries", action="store_true",
                        help="spend the midpoint budget on leaf-chain steps too")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multisearch",
        description="Recover a hidden multiset via anonymous comparison "
                    "queries; benchmark the solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one instance, print report")
    _add_common(p_solve)

    p_bench = sub.add_parser("bench", help="Monte Carlo benchmark")
    _add_common(p_bench)
    p_bench.add_argument("--trials", type=int, default=100)
    p_bench.add_argument("--out", default=None, help="output path (default stdout)")
    p_bench.add_argument("--format", choices=("csv", "json"), default="csv")

    p_scaling = sub.add_parser("scaling", help="sweep k or n, fit the exponent")
    _add_common(p_scaling)
    p_scaling.add_argument("--trials", type=int, default=20)
    p_scaling.add_argument("--sweep", choices=("k", "n"), required=True)
    p_scaling.add_argument("--values", required=True,
                           help="comma-separated sweep values, e.g. 2,3,4,6,8")
    return parser


def _config_from_args(args, trials: int = 1) -> ExperimentConfig:
    return ExperimentConfig(
        n=args.n, k=args.k, algo=args.algo, instance=args.instance,
        delta=args.delta, rho=args.rho, trials=trials, master_seed=args.seed,
        dense_c=args.dense_c,
        faithful_chain_queries=args.faithful_chain_queries,
        out_format=getattr(args, "format", "csv"),
        out_path=getattr(args, "out", None))


def _cmd_solve(args) -> int:
    result = run_experiment(_config_from_args(args, trials=1))
    row = result.rows[0]
    print(json.dumps(row, indent=2))
    return EXIT_OK


def _cmd_bench(args) -> int:
    config = _config_from_args(args, trials=args.trials)
    result = run_experiment(config)
    payload = result.render()
    if config.out_path:
        with open(config.out_path, "w") as fh:
            fh.write(payload)
        print(f"wrote {len(result.rows)} rows to {config.out_path} "
              f"(success rate {result.success_rate:.3f})", file=sys.stderr)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def _cmd_scaling(args) -> int:
    try:
        values = [int(v) for v in args.values.split(",") if v.strip()]
    except ValueError as exc:
        raise DomainError(f"bad --values list: {exc}") from exc
    points = []
    for value in values:
        config = _config_from_args(args, trials=args.trials)
        if args.sweep == "k":
            config.k = value
            x = value
        else:
            config.n = value
            x = max(1, ceil_log2(value))
        result = run_experiment(config)
        points.extend((x, q) for q in result.queries)
    slope = fit_scaling(points)
    label = "k" if args.sweep == "k" else "log2(n)"
    print(f"fitted slope of log2(median queries) vs log2({label}): {slope:.4f}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"solve": _cmd_solve, "bench": _cmd_bench, "scaling": _cmd_scaling}
    try:
        return handlers[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

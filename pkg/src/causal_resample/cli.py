"""Command-line entry point.

Subcommands:
  run        execute an experiment grid from a JSON config or the built-in
             paper-grid preset (optionally sliced)
  summarize  grouped means/standard errors from a metrics.csv
  null-lrt   the bootstrapped LRT null experiment; writes pvalues.csv
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ConfigurationError
from .runner import (
    WORKERS_ENV_VAR,
    apply_slice,
    load_config,
    null_lrt_pvalues,
    paper_grid_preset,
    run_experiment,
    summarize,
    write_pvalues_csv,
    write_summary_csv,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="causal-resample",
        description="Resampling-based validation of score-based causal discovery.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute an experiment grid")
    src = run_p.add_mutually_exclusive_group(required=True)
    src.add_argument("--config", type=Path, help="JSON experiment config")
    src.add_argument(
        "--preset", choices=["paper-grid"], help="use a built-in experiment grid"
    )
    run_p.add_argument(
        "--slice",
        dest="slice_expr",
        help="narrow the grid: 'key=v1|v2,...' with keys graph_type, "
        "num_vertices, avg_degree, sample_sizes, plans, penalties, "
        "algorithms, true_graphs",
    )
    run_p.add_argument("--seed", type=int, help="override the master seed")
    run_p.add_argument(
        "--workers",
        type=int,
        help=f"worker processes (beats {WORKERS_ENV_VAR} and the config value)",
    )
    run_p.add_argument("--out", type=Path, help="output directory")
    run_p.add_argument(
        "--timings",
        action="store_true",
        help="fill the runtime_ms column (wall clock; breaks byte-identical reruns)",
    )
    run_p.add_argument(
        "--dump-graphs", action="store_true", help="write per-replicate edge lists"
    )

    sum_p = sub.add_parser("summarize", help="grouped metric means from metrics.csv")
    sum_p.add_argument("--input", type=Path, required=True, help="metrics.csv path")
    sum_p.add_argument(
        "--by", required=True, help="comma-separated grouping columns"
    )
    sum_p.add_argument("--out", type=Path, help="summary CSV path (default: stdout)")

    null_p = sub.add_parser("null-lrt", help="bootstrapped LRT p-values under the null")
    null_p.add_argument("--n", type=int, required=True, help="sample size per replicate")
    null_p.add_argument("--reps", type=int, required=True, help="number of replicates")
    null_p.add_argument("--seed", type=int, default=0, help="master seed")
    null_p.add_argument("--out", type=Path, default=Path("pvalues.csv"), help="output CSV")
    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    if args.config is not None:
        config = load_config(args.config)
    else:
        config = paper_grid_preset()
    if args.slice_expr:
        config = apply_slice(config, args.slice_expr)
    if args.seed is not None:
        config.master_seed = args.seed
    if args.out is not None:
        config.out_dir = args.out
    if args.timings:
        config.record_runtime = True
    if args.dump_graphs:
        config.dump_graphs = True
    result = run_experiment(config, cli_workers=args.workers)
    print(f"wrote {result.row_count} rows to {result.metrics_path}")
    if result.failed_rows:
        print(f"{result.failed_rows} cells failed; see the status column", file=sys.stderr)
        return 1
    return 0


def _cmd_summarize(args: argparse.Namespace) -> int:
    keys = [k.strip() for k in args.by.split(",") if k.strip()]
    rows = summarize(args.input, keys)
    if args.out is not None:
        write_summary_csv(rows, keys, args.out)
        print(f"wrote {len(rows)} summary rows to {args.out}")
    else:
        writer_fields = keys + ["metric", "mean", "stderr", "count"]
        print(",".join(writer_fields))
        for row in rows:
            print(",".join(str(row[k]) for k in writer_fields))
    return 0


def _cmd_null_lrt(args: argparse.Namespace) -> int:
    pvalues = null_lrt_pvalues(args.n, args.reps, master_seed=args.seed)
    write_pvalues_csv(pvalues, args.out)
    print(f"wrote {len(pvalues)} replicates to {args.out}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "summarize":
            return _cmd_summarize(args)
        return _cmd_null_lrt(args)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

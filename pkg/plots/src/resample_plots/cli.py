"""Command-line entry point for chart generation.

  plots render  --metrics metrics.csv --metric f1 --out f1.svg [--facet ...]
  plots pvalues --input pvalues.csv --out fig2.svg
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .charts import METRICS, ChartDataError, PlotSpec, render, render_pvalue_hist


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plots", description="Charts from causal-resample experiment outputs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    render_p = sub.add_parser("render", help="metric-vs-sample-size line chart")
    render_p.add_argument("--metrics", type=Path, required=True, help="metrics or summary CSV")
    render_p.add_argument("--metric", choices=METRICS, required=True)
    render_p.add_argument("--out", type=Path, required=True, help="output image path")
    render_p.add_argument(
        "--facet",
        help="restrict to one facet: comma-separated key=value over "
        "graph_type, num_vertices, avg_degree",
    )
    render_p.add_argument("--png", action="store_true", help="write PNG instead of SVG")

    pv = sub.add_parser("pvalues", help="histograms of null-LRT p-values")
    pv.add_argument("--input", type=Path, required=True, help="pvalues.csv from null-lrt")
    pv.add_argument("--out", type=Path, required=True, help="output image path")
    pv.add_argument("--png", action="store_true", help="write PNG instead of SVG")
    return parser


def parse_facet(expr: str | None) -> dict[str, str]:
    if not expr:
        return {}
    facet = {}
    for clause in expr.split(","):
        if "=" not in clause:
            raise ChartDataError(f"facet clause {clause!r} is not key=value")
        key, _, value = clause.partition("=")
        facet[key.strip()] = value.strip()
    return facet


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "render":
            spec = PlotSpec(metric=args.metric, facet=parse_facet(args.facet))
            result = render(args.metrics, spec, args.out, png=args.png)
            print(
                f"wrote {result.path} ({len(result.facets)} facet(s), "
                f"{result.series_per_facet} series)"
            )
        else:
            result = render_pvalue_hist(args.input, args.out, png=args.png)
            print(f"wrote {result.path} ({result.bins} bins)")
    except (ChartDataError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

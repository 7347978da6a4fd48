"""Chart rendering from experiment CSVs.

Input is either a raw metrics.csv (one row per grid cell) or the summarize
output (grouped mean/stderr rows); both come from the causal-resample
runner. Series are (resampling plan, penalty discount) pairs: color encodes
the plan, marker encodes the penalty (circle for 1, square for 2). Output
is SVG by default, deterministic byte-for-byte for identical inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

METRICS = ("f1", "precision", "recall", "brier", "ece")
FACET_COLUMNS = ("graph_type", "num_vertices", "avg_degree")

PLAN_COLORS = {
    "none": "#7f7f7f",
    "bootstrap": "#d62728",
    "bootstrap-ess": "#1f77b4",
    "subsample-50": "#2ca02c",
    "subsample-90": "#9467bd",
}
FALLBACK_COLORS = ("#8c564b", "#e377c2", "#bcbd22", "#17becf", "#ff7f0e")
PENALTY_MARKERS = {1.0: "o", 2.0: "s"}
FALLBACK_MARKERS = ("^", "v", "D", "P", "X")

_DETERMINISTIC_RC = {
    "svg.hashsalt": "causal-resample-plots",
    "svg.fonttype": "none",
    "path.simplify": False,
}


class ChartDataError(ValueError):
    """Input CSV cannot produce the requested chart."""


@dataclass(frozen=True)
class PlotSpec:
    """What to draw: one metric against sample size, optionally restricted
    to a single facet (graph_type / num_vertices / avg_degree values)."""

    metric: str
    facet: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.metric not in METRICS:
            raise ChartDataError(f"unknown metric {self.metric!r}; choose from {METRICS}")
        unknown = set(self.facet) - set(FACET_COLUMNS)
        if unknown:
            raise ChartDataError(f"unknown facet columns: {sorted(unknown)}")


@dataclass(frozen=True)
class SeriesData:
    plan: str
    penalty: float
    sample_sizes: np.ndarray
    means: np.ndarray
    stderrs: np.ndarray
    counts: np.ndarray


@dataclass(frozen=True)
class RenderResult:
    path: Path
    facets: tuple[str, ...]
    series_per_facet: int
    series_keys: tuple[tuple[str, float], ...]


@dataclass(frozen=True)
class HistogramResult:
    path: Path
    bins: int
    ess_counts: np.ndarray
    raw_counts: np.ndarray


def plan_color(plan: str) -> str:
    if plan in PLAN_COLORS:
        return PLAN_COLORS[plan]
    # Stable across processes (no reliance on PYTHONHASHSEED).
    digest = sum(plan.encode("utf-8"))
    return FALLBACK_COLORS[digest % len(FALLBACK_COLORS)]


def penalty_marker(penalty: float) -> str:
    if penalty in PENALTY_MARKERS:
        return PENALTY_MARKERS[penalty]
    return FALLBACK_MARKERS[int(penalty) % len(FALLBACK_MARKERS)]


def _require_columns(frame: pd.DataFrame, needed: list[str], path) -> None:
    missing = [c for c in needed if c not in frame.columns]
    if missing:
        raise ChartDataError(f"{path}: missing columns {missing}")


def _load_series(metrics_csv: str | Path, spec: PlotSpec) -> dict[tuple, list[SeriesData]]:
    frame = pd.read_csv(metrics_csv, dtype=str)
    if "metric" in frame.columns and "mean" in frame.columns:
        return _series_from_summary(frame, spec, metrics_csv)
    return _series_from_raw(frame, spec, metrics_csv)


def _series_from_raw(frame: pd.DataFrame, spec: PlotSpec, path) -> dict[tuple, list[SeriesData]]:
    _require_columns(
        frame, ["sample_size", "resampling_label", "penalty_discount", spec.metric], path
    )
    if "status" in frame.columns:
        frame = frame[frame["status"] == "ok"]
    frame = frame[frame[spec.metric].notna() & (frame[spec.metric] != "")]
    for column, wanted in spec.facet.items():
        if column not in frame.columns:
            raise ChartDataError(f"{path}: missing columns ['{column}']")
        frame = frame[frame[column].map(_canon) == _canon(wanted)]
    if frame.empty:
        raise ChartDataError(f"{path}: no data after filtering for {spec.metric}")
    facet_cols = [c for c in FACET_COLUMNS if c in frame.columns]
    out: dict[tuple, list[SeriesData]] = {}
    facet_values = (
        frame[facet_cols].drop_duplicates().itertuples(index=False, name=None)
        if facet_cols
        else [()]
    )
    for facet in sorted(facet_values, key=lambda t: tuple(map(str, t))):
        sub = frame
        for column, value in zip(facet_cols, facet):
            sub = sub[sub[column] == value]
        series: list[SeriesData] = []
        keys = sub[["resampling_label", "penalty_discount"]].drop_duplicates()
        for plan, penalty in sorted(
            keys.itertuples(index=False, name=None), key=lambda t: (t[0], float(t[1]))
        ):
            rows = sub[(sub["resampling_label"] == plan) & (sub["penalty_discount"] == penalty)]
            values = rows[spec.metric].astype(float)
            grouped = values.groupby(rows["sample_size"].astype(int))
            mean = grouped.mean().sort_index()
            count = grouped.size().reindex(mean.index)
            std = grouped.std(ddof=1).reindex(mean.index).fillna(0.0)
            stderr = std / np.sqrt(count)
            series.append(
                SeriesData(
                    plan=plan,
                    penalty=float(penalty),
                    sample_sizes=mean.index.to_numpy(),
                    means=mean.to_numpy(dtype=float),
                    stderrs=stderr.to_numpy(dtype=float),
                    counts=count.to_numpy(dtype=int),
                )
            )
        out[facet] = series
    return out


def _series_from_summary(frame: pd.DataFrame, spec: PlotSpec, path) -> dict[tuple, list[SeriesData]]:
    _require_columns(
        frame,
        ["sample_size", "resampling_label", "penalty_discount", "metric", "mean", "stderr", "count"],
        path,
    )
    frame = frame[frame["metric"] == spec.metric]
    for column, wanted in spec.facet.items():
        if column not in frame.columns:
            raise ChartDataError(f"{path}: missing columns ['{column}']")
        frame = frame[frame[column].map(_canon) == _canon(wanted)]
    if frame.empty:
        raise ChartDataError(f"{path}: no data after filtering for {spec.metric}")
    facet_cols = [c for c in FACET_COLUMNS if c in frame.columns]
    out: dict[tuple, list[SeriesData]] = {}
    facet_values = (
        frame[facet_cols].drop_duplicates().itertuples(index=False, name=None)
        if facet_cols
        else [()]
    )
    for facet in sorted(facet_values, key=lambda t: tuple(map(str, t))):
        sub = frame
        for column, value in zip(facet_cols, facet):
            sub = sub[sub[column] == value]
        series = []
        keys = sub[["resampling_label", "penalty_discount"]].drop_duplicates()
        for plan, penalty in sorted(
            keys.itertuples(index=False, name=None), key=lambda t: (t[0], float(t[1]))
        ):
            rows = sub[
                (sub["resampling_label"] == plan) & (sub["penalty_discount"] == penalty)
            ].copy()
            rows["n"] = rows["sample_size"].astype(int)
            rows = rows.sort_values("n")
            series.append(
                SeriesData(
                    plan=plan,
                    penalty=float(penalty),
                    sample_sizes=rows["n"].to_numpy(),
                    means=rows["mean"].astype(float).to_numpy(),
                    stderrs=rows["stderr"].astype(float).to_numpy(),
                    counts=rows["count"].astype(int).to_numpy(),
                )
            )
        out[facet] = series
    return out


def _canon(value: str) -> str:
    try:
        return repr(float(value))
    except (TypeError, ValueError):
        return str(value)


def render(metrics_csv: str | Path, spec: PlotSpec, out: str | Path, png: bool = False) -> RenderResult:
    """One line chart per facet: mean metric vs sample size for every
    (plan, penalty) series, with standard-error bands where counts exceed 1."""
    by_facet = _load_series(metrics_csv, spec)
    facets = list(by_facet)
    ncols = min(len(facets), 2)
    nrows = (len(facets) + ncols - 1) // ncols
    with plt.rc_context(_DETERMINISTIC_RC):
        fig, axes = plt.subplots(
            nrows, ncols, figsize=(6.4 * ncols, 4.6 * nrows), squeeze=False, sharey=True
        )
        series_keys: list[tuple[str, float]] = []
        for idx, facet in enumerate(facets):
            ax = axes[idx // ncols][idx % ncols]
            for s in by_facet[facet]:
                label = f"{s.plan}, c={s.penalty:g}"
                ax.plot(
                    s.sample_sizes,
                    s.means,
                    color=plan_color(s.plan),
                    marker=penalty_marker(s.penalty),
                    markersize=5,
                    linewidth=1.4,
                    label=label,
                )
                if np.any((s.counts > 1) & (s.stderrs > 0)):
                    ax.fill_between(
                        s.sample_sizes,
                        s.means - s.stderrs,
                        s.means + s.stderrs,
                        color=plan_color(s.plan),
                        alpha=0.15,
                        linewidth=0,
                    )
                if (s.plan, s.penalty) not in series_keys:
                    series_keys.append((s.plan, s.penalty))
            ax.set_xscale("log", base=2)
            ax.set_xlabel("sample size")
            ax.set_ylabel(spec.metric)
            title = ", ".join(f"{k}={v}" for k, v in zip(FACET_COLUMNS, facet)) or spec.metric
            ax.set_title(title)
            ax.grid(True, alpha=0.3)
        axes[0][0].legend(loc="best", fontsize=8)
        for idx in range(len(facets), nrows * ncols):
            axes[idx // ncols][idx % ncols].axis("off")
        fig.tight_layout()
        out = Path(out)
        fig.savefig(out, format="png" if png else "svg", metadata=None if png else {"Date": None})
        plt.close(fig)
    return RenderResult(
        path=out,
        facets=tuple(str(f) for f in facets),
        series_per_facet=max(len(v) for v in by_facet.values()),
        series_keys=tuple(series_keys),
    )


def render_pvalue_hist(
    pvalues_csv: str | Path, out: str | Path, png: bool = False, bins: int = 20
) -> HistogramResult:
    """Side-by-side histograms of the effective-sample-size and raw-size
    p-value columns over [0, 1]."""
    frame = pd.read_csv(pvalues_csv)
    _require_columns(frame, ["p_ess", "p_raw"], pvalues_csv)
    p_ess = frame["p_ess"].to_numpy(dtype=float)
    p_raw = frame["p_raw"].to_numpy(dtype=float)
    if p_ess.size == 0:
        raise ChartDataError(f"{pvalues_csv}: no data")
    edges = np.linspace(0.0, 1.0, bins + 1)
    ess_counts, _ = np.histogram(p_ess, bins=edges)
    raw_counts, _ = np.histogram(p_raw, bins=edges)
    with plt.rc_context(_DETERMINISTIC_RC):
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.6, 4.2), sharey=True)
        width = edges[1] - edges[0]
        ax1.bar(edges[:-1], ess_counts, width=width, align="edge", color="#1f77b4")
        ax1.set_title("effective sample size")
        ax2.bar(edges[:-1], raw_counts, width=width, align="edge", color="#d62728")
        ax2.set_title("raw sample size")
        expected = p_ess.size / bins
        for ax in (ax1, ax2):
            ax.axhline(expected, color="black", linewidth=1, linestyle="--")
            ax.set_xlabel("p-value")
            ax.set_xlim(0, 1)
        ax1.set_ylabel("replicates")
        fig.tight_layout()
        out = Path(out)
        fig.savefig(out, format="png" if png else "svg", metadata=None if png else {"Date": None})
        plt.close(fig)
    return HistogramResult(path=out, bins=bins, ess_counts=ess_counts, raw_counts=raw_counts)

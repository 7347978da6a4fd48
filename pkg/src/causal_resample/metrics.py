"""Ensemble aggregation and edge-recovery metrics.

An ensemble of learned graphs is reduced to an edge frequency table: for
every unordered vertex pair, the fraction of ensemble members in which the
pair is adjacent. Those frequencies are treated as predictive probabilities
of adjacency in the true graph and scored with the Brier score, expected
calibration error, and thresholded precision/recall/F1.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import ConfigurationError
from .graphs import Dag, adjacency_pairs, all_pairs

DEFAULT_ECE_BINS = 10
DEFAULT_THRESHOLD = 0.5


@dataclass(frozen=True)
class EdgeFrequencyTable:
    """Adjacency frequency per unordered pair, over an ensemble of graphs.

    freq[i] corresponds to all_pairs(num_vertices)[i] (pairs (u,v) with
    u < v in lexicographic order); every value is a multiple of
    1/ensemble_size.
    """

    num_vertices: int
    freq: np.ndarray
    ensemble_size: int

    def __post_init__(self):
        expected = self.num_vertices * (self.num_vertices - 1) // 2
        if self.freq.shape != (expected,):
            raise ConfigurationError(
                f"expected {expected} pair frequencies, got shape {self.freq.shape}"
            )
        if self.ensemble_size < 1:
            raise ConfigurationError("ensemble_size must be positive")

    def pairs(self) -> list[tuple[int, int]]:
        return all_pairs(self.num_vertices)

    def as_dict(self) -> dict[tuple[int, int], float]:
        return {pair: float(f) for pair, f in zip(self.pairs(), self.freq)}


@dataclass(frozen=True)
class MetricsRecord:
    """Edge-recovery metrics for one frequency table against one true graph.

    brier and ece are None when the record was produced by prf() alone.
    """

    precision: float
    recall: float
    f1: float
    tp: int
    fp: int
    fn: int
    tn: int
    brier: float | None = None
    ece: float | None = None


def edge_frequencies(graphs: Sequence[Dag]) -> EdgeFrequencyTable:
    """Per-pair adjacency proportion across a non-empty ensemble."""
    if not graphs:
        raise ConfigurationError("ensemble must contain at least one graph")
    v = graphs[0].num_vertices
    if any(g.num_vertices != v for g in graphs):
        raise ConfigurationError("all ensemble graphs must have the same vertex count")
    index = {pair: i for i, pair in enumerate(all_pairs(v))}
    counts = np.zeros(len(index), dtype=np.int64)
    for g in graphs:
        for u, w in g.edges:
            counts[index[(u, w) if u < w else (w, u)]] += 1
    return EdgeFrequencyTable(num_vertices=v, freq=counts / len(graphs), ensemble_size=len(graphs))


def truth_vector(truth: Dag) -> np.ndarray:
    """0/1 adjacency indicator over all_pairs(truth.num_vertices)."""
    adj = adjacency_pairs(truth)
    return np.asarray(
        [1.0 if frozenset(p) in adj else 0.0 for p in all_pairs(truth.num_vertices)]
    )


def brier_from_arrays(freq: np.ndarray, outcome: np.ndarray) -> float:
    """Mean squared error between forecast probabilities and 0/1 outcomes."""
    f = np.asarray(freq, dtype=np.float64)
    o = np.asarray(outcome, dtype=np.float64)
    if f.shape != o.shape:
        raise ConfigurationError(f"shape mismatch: {f.shape} vs {o.shape}")
    return float(np.mean(np.square(f - o)))


def ece_from_arrays(freq: np.ndarray, outcome: np.ndarray, bins: int) -> float:
    """Expected calibration error with equal-width bins over [0, 1].

    Bin i covers [i/bins, (i+1)/bins), the last bin closed at 1.0; each
    occupied bin contributes (its share of pairs) * |observed rate - mean
    predicted probability|.
    """
    if bins < 1:
        raise ConfigurationError(f"bins must be >= 1, got {bins}")
    f = np.asarray(freq, dtype=np.float64)
    o = np.asarray(outcome, dtype=np.float64)
    if f.shape != o.shape:
        raise ConfigurationError(f"shape mismatch: {f.shape} vs {o.shape}")
    idx = np.minimum((f * bins).astype(np.int64), bins - 1)
    total = f.size
    ece = 0.0
    for b in range(bins):
        in_bin = idx == b
        count = int(np.count_nonzero(in_bin))
        if count == 0:
            continue
        ece += (count / total) * abs(float(o[in_bin].mean()) - float(f[in_bin].mean()))
    return ece


def confusion_from_arrays(
    freq: np.ndarray, outcome: np.ndarray, threshold: float
) -> tuple[int, int, int, int]:
    """(tp, fp, fn, tn) with an edge predicted wherever freq >= threshold."""
    f = np.asarray(freq, dtype=np.float64)
    o = np.asarray(outcome, dtype=np.float64) > 0.5
    pred = f >= threshold
    tp = int(np.count_nonzero(pred & o))
    fp = int(np.count_nonzero(pred & ~o))
    fn = int(np.count_nonzero(~pred & o))
    tn = int(np.count_nonzero(~pred & ~o))
    return tp, fp, fn, tn


def prf_from_counts(tp: int, fp: int, fn: int, tn: int) -> tuple[float, float, float]:
    """Precision/recall/F1 with explicit degenerate-case conventions:
    an empty prediction scores precision 1 only when nothing was missed, an
    empty truth scores recall 1, and f1 is 0 when precision + recall is 0."""
    if tp + fp == 0:
        precision = 1.0 if fn == 0 else 0.0
    else:
        precision = tp / (tp + fp)
    recall = 1.0 if tp + fn == 0 else tp / (tp + fn)
    if precision + recall == 0:
        f1 = 0.0
    else:
        f1 = 2.0 * precision * recall / (precision + recall)
    return precision, recall, f1


def brier(table: EdgeFrequencyTable, truth: Dag) -> float:
    _check_table(table, truth)
    return brier_from_arrays(table.freq, truth_vector(truth))


def ece(table: EdgeFrequencyTable, truth: Dag, bins: int = DEFAULT_ECE_BINS) -> float:
    _check_table(table, truth)
    return ece_from_arrays(table.freq, truth_vector(truth), bins)


def prf(table: EdgeFrequencyTable, truth: Dag, threshold: float = DEFAULT_THRESHOLD) -> MetricsRecord:
    _check_table(table, truth)
    if not (0.0 < threshold < 1.0):
        raise ConfigurationError(f"threshold must be in (0,1), got {threshold}")
    tp, fp, fn, tn = confusion_from_arrays(table.freq, truth_vector(truth), threshold)
    precision, recall, f1 = prf_from_counts(tp, fp, fn, tn)
    return MetricsRecord(precision=precision, recall=recall, f1=f1, tp=tp, fp=fp, fn=fn, tn=tn)


def evaluate(
    table: EdgeFrequencyTable,
    truth: Dag,
    bins: int = DEFAULT_ECE_BINS,
    threshold: float = DEFAULT_THRESHOLD,
) -> MetricsRecord:
    """All metrics of one table against one true graph."""
    record = prf(table, truth, threshold)
    outcome = truth_vector(truth)
    return MetricsRecord(
        precision=record.precision,
        recall=record.recall,
        f1=record.f1,
        tp=record.tp,
        fp=record.fp,
        fn=record.fn,
        tn=record.tn,
        brier=brier_from_arrays(table.freq, outcome),
        ece=ece_from_arrays(table.freq, outcome, bins),
    )


def write_frequency_csv(table: EdgeFrequencyTable, path: str | Path) -> None:
    """Columns u,v,freq for all pairs u < v, header included."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["u", "v", "freq"])
        for (u, v), f in zip(table.pairs(), table.freq):
            writer.writerow([u, v, repr(float(f))])


def read_frequency_csv(path: str | Path, ensemble_size: int) -> EdgeFrequencyTable:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["u", "v", "freq"]:
            raise ConfigurationError(f"{path}: unexpected header {header}")
        rows = [(int(u), int(v), float(f)) for u, v, f in reader]
    num_vertices = max(v for _, v, _ in rows) + 1 if rows else 1
    freq_map = {(u, v): f for u, v, f in rows}
    freq = np.asarray([freq_map[pair] for pair in all_pairs(num_vertices)])
    return EdgeFrequencyTable(num_vertices=num_vertices, freq=freq, ensemble_size=ensemble_size)


def _check_table(table: EdgeFrequencyTable, truth: Dag) -> None:
    if table.num_vertices != truth.num_vertices:
        raise ConfigurationError(
            f"table has {table.num_vertices} vertices, truth has {truth.num_vertices}"
        )

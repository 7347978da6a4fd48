"""Experiment orchestration: seeded grid execution, persistence, summaries.

The pipeline per grid cell: simulate one dataset from a known SEM, resample
it per the plan, learn one graph per replicate, aggregate the ensemble into
an edge frequency table, and score it against the true graph's adjacency.

Every random draw is seeded by a stable 64-bit mix of the master seed and
the cell coordinates, so results are byte-identical across reruns and
worker counts. The one dataset per (true graph, sample size) is shared by
all plans, penalties, and algorithms, making plan comparisons paired.
"""

from __future__ import annotations

import csv
import json
import math
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import ConfigurationError
from .graphs import Dag, GraphSpec, GraphType, generate_dag, write_edge_list
from .metrics import (
    DEFAULT_ECE_BINS,
    DEFAULT_THRESHOLD,
    EdgeFrequencyTable,
    MetricsRecord,
    edge_frequencies,
    evaluate,
    write_frequency_csv,
)
from .resample import (
    ResamplePlan,
    bootstrap,
    bootstrap_plan,
    effective_sample_size,
    no_resampling,
    resample,
    subsample_plan,
)
from .scoring import ScoreConfig, SufficientStats, lrt_pvalue, residual_variance, sufficient_stats
from .search import Algorithm, SearchConfig, run_search
from .simulate import Dataset, SemModel, parameterize, simulate

WORKERS_ENV_VAR = "CAUSAL_RESAMPLE_WORKERS"

_MASK64 = (1 << 64) - 1
_SALT_GRAPH = 0x67726170
_SALT_MODEL = 0x6D6F6465
_SALT_DATA = 0x64617461
_SALT_REPLICATE = 0x72657063
_SALT_NULL_LRT = 0x6E756C6C

METRIC_COLUMNS = ("brier", "ece", "precision", "recall", "f1")
RESULT_COLUMNS = (
    "graph_type",
    "num_vertices",
    "avg_degree",
    "true_graph_id",
    "sample_size",
    "resampling_label",
    "penalty_discount",
    "algorithm",
    "brier",
    "ece",
    "precision",
    "recall",
    "f1",
    "runtime_ms",
    "seed_path",
    "status",
)


def splitmix64(z: int) -> int:
    """One round of the splitmix64 mixing function."""
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def derive_seed(master_seed: int, *coords: int) -> int:
    """Stable 64-bit seed from the master seed and integer coordinates;
    independent of scheduling or worker count."""
    h = splitmix64(master_seed & _MASK64)
    for c in coords:
        h = splitmix64(h ^ (int(c) & _MASK64))
    return h


@dataclass(frozen=True)
class GraphGridEntry:
    """One random-graph family in the grid, with an optional per-entry
    override of how many true graphs to draw from it."""

    spec: GraphSpec
    num_graphs: int | None = None


@dataclass
class ExperimentConfig:
    graph_specs: list[GraphGridEntry]
    sample_sizes: list[int]
    resample_plans: list[ResamplePlan]
    penalty_discounts: list[float]
    algorithms: list[Algorithm]
    true_graphs_per_spec: int = 1
    ece_bins: int = DEFAULT_ECE_BINS
    threshold: float = DEFAULT_THRESHOLD
    master_seed: int = 0
    workers: int | None = None
    out_dir: Path = Path("results")
    record_runtime: bool = False
    dump_graphs: bool = False
    max_sweeps: int = 100

    def num_graphs(self, entry: GraphGridEntry) -> int:
        return entry.num_graphs if entry.num_graphs is not None else self.true_graphs_per_spec

    def validate(self) -> None:
        # Empty dimension lists are allowed and produce a header-only run.
        if any(n < 1 for n in self.sample_sizes):
            raise ConfigurationError("sample_sizes must be positive integers")
        if any(c <= 0 for c in self.penalty_discounts):
            raise ConfigurationError("penalty discounts must be positive")
        if not (0.0 < self.threshold < 1.0):
            raise ConfigurationError(f"threshold must be in (0,1), got {self.threshold}")
        if self.ece_bins < 1:
            raise ConfigurationError("ece_bins must be >= 1")
        for entry in self.graph_specs:
            if self.num_graphs(entry) < 1:
                raise ConfigurationError("each grid entry needs at least one true graph")


@dataclass(frozen=True)
class RunResult:
    metrics_path: Path
    manifest_path: Path
    freq_dir: Path
    row_count: int
    failed_rows: int


class CellError(RuntimeError):
    """A replicate inside one grid cell failed; names the failing replicate."""


def run_cell(
    true_dag: Dag,
    model: SemModel,
    n: int,
    plan: ResamplePlan,
    cfg: ScoreConfig,
    algorithm: Algorithm,
    seed: int,
    dataset: Dataset | None = None,
    ece_bins: int = DEFAULT_ECE_BINS,
    threshold: float = DEFAULT_THRESHOLD,
    max_sweeps: int = 100,
    dump_dir: Path | None = None,
) -> tuple[EdgeFrequencyTable, MetricsRecord]:
    """One grid cell: simulate (unless given the shared dataset), resample
    per replicate, search per replicate, aggregate, score against truth."""
    if dataset is None:
        data_rng = np.random.default_rng(derive_seed(seed, _SALT_DATA))
        dataset = simulate(model, n, data_rng)
    search_cfg = SearchConfig(algorithm=algorithm, score_config=cfg, max_sweeps=max_sweeps)
    graphs = []
    for rep in range(plan.replicates):
        rep_seed = derive_seed(seed, _SALT_REPLICATE, rep)
        try:
            rng = np.random.default_rng(rep_seed)
            resampled = resample(dataset, plan, rng)
            stats = sufficient_stats(resampled, ess_adjust=plan.ess_adjust)
            dag = run_search(stats, search_cfg, rng)
        except Exception as exc:
            raise CellError(
                f"plan={plan.label} replicate={rep} seed={rep_seed:#018x}: {exc}"
            ) from exc
        graphs.append(dag)
    if dump_dir is not None:
        dump_dir.mkdir(parents=True, exist_ok=True)
        for k, dag in enumerate(graphs):
            write_edge_list(dag, dump_dir / f"rep{k}.edges")
    table = edge_frequencies(graphs)
    record = evaluate(table, true_dag, bins=ece_bins, threshold=threshold)
    return table, record


def _format_number(x: float) -> str:
    # repr gives the shortest decimal that round-trips, and is stable across
    # processes, which the byte-identical-output contract relies on.
    return repr(float(x))


def _cell_id(
    spec: GraphSpec, graph_id: int, n: int, plan: ResamplePlan, penalty: float, alg: Algorithm
) -> str:
    gt = "er" if spec.graph_type is GraphType.ERDOS_RENYI else "sf"
    deg = f"{spec.avg_degree:g}"
    pen = f"{penalty:g}"
    return f"{gt}{spec.num_vertices}d{deg}-g{graph_id:03d}-n{n}-{plan.label}-c{pen}-{alg.value}"


def _graph_task(args: tuple) -> list[dict]:
    """Worker unit: all cells for one (spec index, true graph index)."""
    config, spec_idx, graph_idx = args
    entry = config.graph_specs[spec_idx]
    spec = entry.spec
    rows: list[dict] = []
    graph_rng = np.random.default_rng(
        derive_seed(config.master_seed, _SALT_GRAPH, spec_idx, graph_idx)
    )
    true_dag = generate_dag(spec, graph_rng)
    model_rng = np.random.default_rng(
        derive_seed(config.master_seed, _SALT_MODEL, spec_idx, graph_idx)
    )
    model = parameterize(true_dag, model_rng)
    for n_idx, n in enumerate(config.sample_sizes):
        data_rng = np.random.default_rng(
            derive_seed(config.master_seed, _SALT_DATA, spec_idx, graph_idx, n)
        )
        dataset = simulate(model, n, data_rng)
        for plan_idx, plan in enumerate(config.resample_plans):
            for pen_idx, penalty in enumerate(config.penalty_discounts):
                for alg_idx, alg in enumerate(config.algorithms):
                    cell_seed = derive_seed(
                        config.master_seed, spec_idx, graph_idx, n, plan_idx, pen_idx, alg_idx
                    )
                    seed_path = (
                        f"{spec_idx}.{graph_idx}.{n}.{plan_idx}.{pen_idx}.{alg_idx}"
                        f":{cell_seed:016x}"
                    )
                    row = {
                        "graph_type": spec.graph_type.value,
                        "num_vertices": str(spec.num_vertices),
                        "avg_degree": _format_number(spec.avg_degree),
                        "true_graph_id": str(graph_idx),
                        "sample_size": str(n),
                        "resampling_label": plan.label,
                        "penalty_discount": _format_number(penalty),
                        "algorithm": alg.value,
                        "seed_path": seed_path,
                        "_key": (spec_idx, graph_idx, n_idx, plan_idx, pen_idx, alg_idx),
                        "_cell_id": _cell_id(spec, graph_idx, n, plan, penalty, alg),
                    }
                    started = time.perf_counter()
                    try:
                        dump_dir = None
                        if config.dump_graphs:
                            dump_dir = Path(config.out_dir) / "graphs" / row["_cell_id"]
                        table, record = run_cell(
                            true_dag,
                            model,
                            n,
                            plan,
                            ScoreConfig(penalty_discount=penalty),
                            alg,
                            cell_seed,
                            dataset=dataset,
                            ece_bins=config.ece_bins,
                            threshold=config.threshold,
                            max_sweeps=config.max_sweeps,
                            dump_dir=dump_dir,
                        )
                    except Exception as exc:
                        row.update(
                            {m: "" for m in METRIC_COLUMNS},
                            runtime_ms="",
                            status=f"error: {exc}",
                            _freq=None,
                        )
                        rows.append(row)
                        continue
                    elapsed_ms = (time.perf_counter() - started) * 1000.0
                    row.update(
                        brier=_format_number(record.brier),
                        ece=_format_number(record.ece),
                        precision=_format_number(record.precision),
                        recall=_format_number(record.recall),
                        f1=_format_number(record.f1),
                        runtime_ms=f"{elapsed_ms:.3f}" if config.record_runtime else "",
                        status="ok",
                        _freq=table,
                    )
                    rows.append(row)
    return rows


def resolve_workers(config_workers: int | None, cli_workers: int | None = None) -> int:
    """Precedence: explicit CLI flag, then the environment variable, then the
    config value, then the machine's CPU count."""
    if cli_workers is not None:
        return max(1, cli_workers)
    env = os.environ.get(WORKERS_ENV_VAR)
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise ConfigurationError(f"{WORKERS_ENV_VAR} must be an integer, got {env!r}") from exc
    if config_workers is not None:
        return max(1, config_workers)
    return os.cpu_count() or 1


def run_experiment(config: ExperimentConfig, cli_workers: int | None = None) -> RunResult:
    """Execute the full grid and write metrics.csv, per-cell frequency
    tables, and a manifest. Output bytes depend only on (config,
    master_seed), never on the worker count."""
    config.validate()
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    freq_dir = out_dir / "freq"
    freq_dir.mkdir(exist_ok=True)

    tasks = [
        (config, spec_idx, graph_idx)
        for spec_idx, entry in enumerate(config.graph_specs)
        for graph_idx in range(config.num_graphs(entry))
    ]
    workers = resolve_workers(config.workers, cli_workers)
    all_rows: list[dict] = []
    if tasks:
        if workers == 1:
            for task in tasks:
                all_rows.extend(_graph_task(task))
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for rows in pool.map(_graph_task, tasks, chunksize=1):
                    all_rows.extend(rows)

    all_rows.sort(key=lambda r: r["_key"])
    metrics_path = out_dir / "metrics.csv"
    failed = 0
    with open(metrics_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=RESULT_COLUMNS, extrasaction="ignore")
        writer.writeheader()
        for row in all_rows:
            if row["status"] != "ok":
                failed += 1
            writer.writerow(row)
    for row in all_rows:
        table = row.get("_freq")
        if table is not None:
            write_frequency_csv(table, freq_dir / f"{row['_cell_id']}.csv")

    manifest_path = out_dir / "manifest.json"
    manifest = {
        "config": config_to_dict(config),
        "master_seed": config.master_seed,
        "row_count": len(all_rows),
        "failed_rows": failed,
    }
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return RunResult(
        metrics_path=metrics_path,
        manifest_path=manifest_path,
        freq_dir=freq_dir,
        row_count=len(all_rows),
        failed_rows=failed,
    )


def summarize(metrics_csv: str | Path, group_keys: Sequence[str]) -> list[dict]:
    """Grouped means and standard errors of every metric column; one output
    row per (group, metric). Rows whose status is not ok are skipped."""
    with open(metrics_csv, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for key in group_keys:
            if key not in header:
                raise ConfigurationError(f"unknown column {key!r}; available: {header}")
        rows = [r for r in reader if r.get("status", "ok") == "ok"]
    groups: dict[tuple, list[dict]] = {}
    for r in rows:
        groups.setdefault(tuple(r[k] for k in group_keys), []).append(r)
    out: list[dict] = []
    for gkey in sorted(groups, key=_group_sort_key):
        members = groups[gkey]
        for metric in METRIC_COLUMNS:
            values = [float(r[metric]) for r in members if r[metric] != ""]
            if not values:
                continue
            mean = statistics.fmean(values)
            stderr = (
                statistics.stdev(values) / math.sqrt(len(values)) if len(values) > 1 else 0.0
            )
            rec = dict(zip(group_keys, gkey))
            rec.update(
                metric=metric,
                mean=_format_number(mean),
                stderr=_format_number(stderr),
                count=str(len(values)),
            )
            out.append(rec)
    return out


def _group_sort_key(gkey: tuple) -> tuple:
    parts = []
    for item in gkey:
        try:
            parts.append((0, float(item), ""))
        except ValueError:
            parts.append((1, 0.0, item))
    return tuple(parts)


def write_summary_csv(rows: list[dict], group_keys: Sequence[str], path: str | Path) -> None:
    fieldnames = list(group_keys) + ["metric", "mean", "stderr", "count"]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(rows)


def null_lrt_pvalues(n: int, reps: int, master_seed: int = 0) -> np.ndarray:
    """The bootstrapped LRT null experiment: per replicate, draw a fresh
    bivariate independent standard-normal sample of size n, bootstrap it
    once, and test the single-edge comparison twice, scoring at the
    effective sample size and at the raw size.

    Returns a (reps, 2) array of (p_ess, p_raw).
    """
    if n < 2 or reps < 1:
        raise ConfigurationError("need n >= 2 and reps >= 1")
    out = np.empty((reps, 2))
    for rep in range(reps):
        rng = np.random.default_rng(derive_seed(master_seed, _SALT_NULL_LRT, rep))
        data = Dataset(values=rng.standard_normal((n, 2)))
        boot = bootstrap(data, rng)
        stats_raw = sufficient_stats(boot, ess_adjust=False)
        stats_ess = SufficientStats(
            cov=stats_raw.cov,
            n_raw=stats_raw.n_raw,
            n_eff=effective_sample_size(boot.weights),
        )
        sigma_no = math.sqrt(stats_raw.cov[1, 1])
        sigma_yes = math.sqrt(residual_variance(stats_raw, 1, [0]))
        out[rep, 0] = lrt_pvalue(stats_ess, sigma_no, sigma_yes)
        out[rep, 1] = lrt_pvalue(stats_raw, sigma_no, sigma_yes)
    return out


def write_pvalues_csv(pvalues: np.ndarray, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["rep", "p_ess", "p_raw"])
        for rep, (p_ess, p_raw) in enumerate(pvalues):
            writer.writerow([rep, repr(float(p_ess)), repr(float(p_raw))])


# ---------------------------------------------------------------------------
# Paper grid preset and slicing


def paper_grid_preset(master_seed: int = 0, out_dir: str | Path = "results") -> ExperimentConfig:
    """The full simulation grid: ER and scale-free graphs, 20/100 variables,
    average degree 2/6 (250 true graphs at v=20, 50 at v=100), sample sizes
    40..10240 doubling, five plans (none, bootstrap, bootstrap-ess, 50% and
    90% subsampling; 100 replicates), penalties 1 and 2, both algorithms."""
    entries = []
    for gt in (GraphType.ERDOS_RENYI, GraphType.SCALE_FREE):
        for v in (20, 100):
            for d in (2.0, 6.0):
                entries.append(
                    GraphGridEntry(
                        spec=GraphSpec(graph_type=gt, num_vertices=v, avg_degree=d),
                        num_graphs=250 if v == 20 else 50,
                    )
                )
    return ExperimentConfig(
        graph_specs=entries,
        sample_sizes=[10 * 2**k for k in range(2, 11)],
        resample_plans=[
            no_resampling(),
            bootstrap_plan(ess_adjust=False),
            bootstrap_plan(ess_adjust=True),
            subsample_plan(0.5),
            subsample_plan(0.9),
        ],
        penalty_discounts=[1.0, 2.0],
        algorithms=[Algorithm.BOSS, Algorithm.HILL_CLIMB],
        master_seed=master_seed,
        out_dir=Path(out_dir),
    )


def apply_slice(config: ExperimentConfig, slice_expr: str) -> ExperimentConfig:
    """Narrow a config with 'key=v1|v2,key2=v3' filters.

    Keys: graph_type, num_vertices (v), avg_degree (d), sample_sizes (n),
    plans, penalties (c), algorithms (alg), true_graphs (cap per entry).
    """
    cfg = replace(config)
    cfg.graph_specs = list(config.graph_specs)
    cfg.sample_sizes = list(config.sample_sizes)
    cfg.resample_plans = list(config.resample_plans)
    cfg.penalty_discounts = list(config.penalty_discounts)
    cfg.algorithms = list(config.algorithms)
    for clause in slice_expr.split(","):
        clause = clause.strip()
        if not clause:
            continue
        if "=" not in clause:
            raise ConfigurationError(f"slice clause {clause!r} is not key=value")
        key, _, raw = clause.partition("=")
        key = key.strip().lower()
        values = [v.strip() for v in raw.split("|") if v.strip()]
        if key == "graph_type":
            wanted = {_parse_graph_type(v) for v in values}
            cfg.graph_specs = [e for e in cfg.graph_specs if e.spec.graph_type in wanted]
        elif key in ("num_vertices", "v"):
            wanted_v = {int(v) for v in values}
            cfg.graph_specs = [e for e in cfg.graph_specs if e.spec.num_vertices in wanted_v]
        elif key in ("avg_degree", "d"):
            wanted_d = {float(v) for v in values}
            cfg.graph_specs = [e for e in cfg.graph_specs if e.spec.avg_degree in wanted_d]
        elif key in ("sample_sizes", "n"):
            wanted_n = {int(v) for v in values}
            cfg.sample_sizes = [n for n in cfg.sample_sizes if n in wanted_n]
        elif key == "plans":
            cfg.resample_plans = [p for p in cfg.resample_plans if p.label in values]
        elif key in ("penalties", "c"):
            wanted_c = {float(v) for v in values}
            cfg.penalty_discounts = [c for c in cfg.penalty_discounts if c in wanted_c]
        elif key in ("algorithms", "alg"):
            cfg.algorithms = [a for a in cfg.algorithms if a.value in values]
        elif key == "true_graphs":
            cap = int(values[0])
            cfg.graph_specs = [
                GraphGridEntry(spec=e.spec, num_graphs=min(config.num_graphs(e), cap))
                for e in cfg.graph_specs
            ]
        else:
            raise ConfigurationError(f"unknown slice key {key!r}")
    if not (
        cfg.graph_specs
        and cfg.sample_sizes
        and cfg.resample_plans
        and cfg.penalty_discounts
        and cfg.algorithms
    ):
        raise ConfigurationError(f"slice {slice_expr!r} selected an empty grid")
    return cfg


def _parse_graph_type(text: str) -> GraphType:
    key = text.strip().lower()
    if key in ("er", "erdos-renyi", "erdos_renyi"):
        return GraphType.ERDOS_RENYI
    if key in ("sf", "scale-free", "scale_free"):
        return GraphType.SCALE_FREE
    raise ConfigurationError(f"unknown graph type {text!r}")


# ---------------------------------------------------------------------------
# Config (de)serialization: JSON schema mirroring ExperimentConfig


def config_to_dict(config: ExperimentConfig) -> dict:
    return {
        "graph_specs": [
            {
                "graph_type": e.spec.graph_type.value,
                "num_vertices": e.spec.num_vertices,
                "avg_degree": e.spec.avg_degree,
                **({"num_graphs": e.num_graphs} if e.num_graphs is not None else {}),
            }
            for e in config.graph_specs
        ],
        "true_graphs_per_spec": config.true_graphs_per_spec,
        "sample_sizes": list(config.sample_sizes),
        "resample_plans": [_plan_to_dict(p) for p in config.resample_plans],
        "penalty_discounts": list(config.penalty_discounts),
        "algorithms": [a.value for a in config.algorithms],
        "ece_bins": config.ece_bins,
        "threshold": config.threshold,
        "master_seed": config.master_seed,
        "workers": config.workers,
        "out_dir": str(config.out_dir),
        "record_runtime": config.record_runtime,
        "dump_graphs": config.dump_graphs,
        "max_sweeps": config.max_sweeps,
    }


def _plan_to_dict(plan: ResamplePlan) -> dict:
    d: dict = {"kind": plan.kind.value, "replicates": plan.replicates}
    if plan.ess_adjust:
        d["ess_adjust"] = True
    if plan.fraction is not None:
        d["fraction"] = plan.fraction
    return d


def _plan_from_dict(d: dict) -> ResamplePlan:
    from .resample import ResampleKind

    kind = ResampleKind(d["kind"])
    if kind is ResampleKind.NONE:
        return no_resampling()
    replicates = int(d.get("replicates", 100))
    if kind is ResampleKind.BOOTSTRAP:
        return bootstrap_plan(ess_adjust=bool(d.get("ess_adjust", False)), replicates=replicates)
    return subsample_plan(float(d["fraction"]), replicates=replicates)


def config_from_dict(d: dict) -> ExperimentConfig:
    try:
        entries = [
            GraphGridEntry(
                spec=GraphSpec(
                    graph_type=_parse_graph_type(e["graph_type"]),
                    num_vertices=int(e["num_vertices"]),
                    avg_degree=float(e["avg_degree"]),
                ),
                num_graphs=int(e["num_graphs"]) if "num_graphs" in e else None,
            )
            for e in d["graph_specs"]
        ]
        config = ExperimentConfig(
            graph_specs=entries,
            sample_sizes=[int(n) for n in d["sample_sizes"]],
            resample_plans=[_plan_from_dict(p) for p in d["resample_plans"]],
            penalty_discounts=[float(c) for c in d["penalty_discounts"]],
            algorithms=[Algorithm(a) for a in d["algorithms"]],
            true_graphs_per_spec=int(d.get("true_graphs_per_spec", 1)),
            ece_bins=int(d.get("ece_bins", DEFAULT_ECE_BINS)),
            threshold=float(d.get("threshold", DEFAULT_THRESHOLD)),
            master_seed=int(d.get("master_seed", 0)),
            workers=int(d["workers"]) if d.get("workers") is not None else None,
            out_dir=Path(d.get("out_dir", "results")),
            record_runtime=bool(d.get("record_runtime", False)),
            dump_graphs=bool(d.get("dump_graphs", False)),
            max_sweeps=int(d.get("max_sweeps", 100)),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise ConfigurationError(f"invalid experiment config: {exc}") from exc
    config.validate()
    return config


def load_config(path: str | Path) -> ExperimentConfig:
    with open(path, encoding="utf-8") as fh:
        return config_from_dict(json.load(fh))

import csv
import json
import math
from pathlib import Path

import numpy as np
import pytest

from causal_resample.errors import ConfigurationError
from causal_resample.graphs import GraphSpec, GraphType, generate_er_dag
from causal_resample.resample import bootstrap_plan, no_resampling, subsample_plan
from causal_resample.runner import (
    ExperimentConfig,
    GraphGridEntry,
    apply_slice,
    config_from_dict,
    config_to_dict,
    derive_seed,
    load_config,
    null_lrt_pvalues,
    paper_grid_preset,
    resolve_workers,
    run_cell,
    run_experiment,
    summarize,
    write_summary_csv,
)
from causal_resample.scoring import ScoreConfig
from causal_resample.search import Algorithm
from causal_resample.simulate import parameterize


def tiny_config(out_dir, workers=1, **overrides):
    base = dict(
        graph_specs=[GraphGridEntry(GraphSpec(GraphType.ERDOS_RENYI, 6, 2.0), num_graphs=2)],
        sample_sizes=[60],
        resample_plans=[no_resampling(), bootstrap_plan(True, 10)],
        penalty_discounts=[1.0],
        algorithms=[Algorithm.BOSS],
        master_seed=77,
        workers=workers,
        out_dir=Path(out_dir),
    )
    base.update(overrides)
    return ExperimentConfig(**base)


class TestSeedDerivation:
    def test_deterministic(self):
        assert derive_seed(1, 2, 3) == derive_seed(1, 2, 3)

    def test_coordinates_matter(self):
        seeds = {derive_seed(9, a, b) for a in range(10) for b in range(10)}
        assert len(seeds) == 100

    def test_master_matters(self):
        assert derive_seed(1, 5) != derive_seed(2, 5)


class TestRunCell:
    def test_no_resampling_gives_binary_frequencies(self, rng):
        spec = GraphSpec(GraphType.ERDOS_RENYI, 8, 2.0)
        dag = generate_er_dag(spec, rng)
        model = parameterize(dag, rng)
        table, record = run_cell(
            dag, model, 200, no_resampling(), ScoreConfig(1.0), Algorithm.BOSS, seed=5
        )
        assert set(np.unique(table.freq)) <= {0.0, 1.0}
        assert table.ensemble_size == 1
        # single-graph ensemble: thresholded metrics equal the graph's own
        from causal_resample.metrics import evaluate

        direct = evaluate(table, dag)
        assert (record.precision, record.recall, record.f1) == (
            direct.precision,
            direct.recall,
            direct.f1,
        )

    def test_frequencies_are_replicate_multiples(self, rng):
        spec = GraphSpec(GraphType.ERDOS_RENYI, 6, 2.0)
        dag = generate_er_dag(spec, rng)
        model = parameterize(dag, rng)
        table, _ = run_cell(
            dag, model, 80, bootstrap_plan(True, 10), ScoreConfig(1.0), Algorithm.BOSS, seed=9
        )
        scaled = table.freq * 10
        assert np.allclose(scaled, np.round(scaled))

    def test_deterministic_given_seed(self, rng):
        spec = GraphSpec(GraphType.ERDOS_RENYI, 6, 2.0)
        dag = generate_er_dag(spec, rng)
        model = parameterize(dag, rng)
        t1, r1 = run_cell(
            dag, model, 80, subsample_plan(0.5, 8), ScoreConfig(1.0), Algorithm.BOSS, seed=13
        )
        t2, r2 = run_cell(
            dag, model, 80, subsample_plan(0.5, 8), ScoreConfig(1.0), Algorithm.BOSS, seed=13
        )
        assert np.array_equal(t1.freq, t2.freq)
        assert r1 == r2

    def test_graph_dump(self, rng, tmp_path):
        spec = GraphSpec(GraphType.ERDOS_RENYI, 5, 2.0)
        dag = generate_er_dag(spec, rng)
        model = parameterize(dag, rng)
        run_cell(
            dag,
            model,
            60,
            bootstrap_plan(False, 4),
            ScoreConfig(1.0),
            Algorithm.BOSS,
            seed=3,
            dump_dir=tmp_path / "dump",
        )
        files = sorted(p.name for p in (tmp_path / "dump").iterdir())
        assert files == ["rep0.edges", "rep1.edges", "rep2.edges", "rep3.edges"]


class TestRunExperiment:
    def test_empty_grid_writes_header_only(self, tmp_path):
        config = tiny_config(tmp_path / "out", graph_specs=[])
        result = run_experiment(config)
        assert result.row_count == 0 and result.failed_rows == 0
        lines = result.metrics_path.read_text().splitlines()
        assert len(lines) == 1
        assert lines[0].startswith("graph_type,num_vertices")

    def test_repeat_run_is_byte_identical(self, tmp_path):
        r1 = run_experiment(tiny_config(tmp_path / "a"))
        r2 = run_experiment(tiny_config(tmp_path / "b"))
        assert r1.metrics_path.read_bytes() == r2.metrics_path.read_bytes()

    def test_worker_count_does_not_change_output(self, tmp_path):
        r1 = run_experiment(tiny_config(tmp_path / "w1", workers=1))
        r2 = run_experiment(tiny_config(tmp_path / "w2", workers=2))
        assert r1.metrics_path.read_bytes() == r2.metrics_path.read_bytes()
        for f1 in sorted(r1.freq_dir.iterdir()):
            f2 = r2.freq_dir / f1.name
            assert f1.read_bytes() == f2.read_bytes()

    def test_row_count_is_grid_product(self, tmp_path):
        result = run_experiment(tiny_config(tmp_path / "out"))
        # 2 graphs x 1 sample size x 2 plans x 1 penalty x 1 algorithm
        assert result.row_count == 4
        with open(result.metrics_path, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 4
        assert all(r["status"] == "ok" for r in rows)
        assert all(r["runtime_ms"] == "" for r in rows)
        for r in rows:
            for metric in ("brier", "ece", "precision", "recall", "f1"):
                assert 0.0 <= float(r[metric]) <= 1.0

    def test_failures_are_isolated_per_row(self, tmp_path):
        # n=2 with 50% subsampling leaves one row: sufficient_stats refuses.
        config = tiny_config(
            tmp_path / "out",
            sample_sizes=[2],
            resample_plans=[subsample_plan(0.5, 3)],
        )
        result = run_experiment(config)
        assert result.failed_rows == result.row_count == 2
        with open(result.metrics_path, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert all(r["status"].startswith("error:") for r in rows)
        assert all(r["brier"] == "" for r in rows)

    def test_manifest_records_config(self, tmp_path):
        config = tiny_config(tmp_path / "out")
        result = run_experiment(config)
        manifest = json.loads(result.manifest_path.read_text())
        assert manifest["master_seed"] == 77
        assert manifest["row_count"] == 4
        assert manifest["config"]["sample_sizes"] == [60]

    def test_runtime_column_filled_when_requested(self, tmp_path):
        config = tiny_config(tmp_path / "out", record_runtime=True)
        result = run_experiment(config)
        with open(result.metrics_path, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert all(float(r["runtime_ms"]) > 0 for r in rows)


class TestSummarize:
    def make_metrics(self, tmp_path):
        result = run_experiment(tiny_config(tmp_path / "out"))
        return result.metrics_path

    def test_single_row_group(self, tmp_path):
        path = self.make_metrics(tmp_path)
        rows = summarize(path, ["resampling_label", "true_graph_id"])
        singles = [r for r in rows if r["metric"] == "f1"]
        assert all(r["count"] == "1" for r in singles)
        assert all(float(r["stderr"]) == 0.0 for r in singles)

    def test_group_mean_matches_manual(self, tmp_path):
        path = self.make_metrics(tmp_path)
        with open(path, newline="") as fh:
            raw = list(csv.DictReader(fh))
        rows = summarize(path, ["resampling_label"])
        for r in rows:
            if r["metric"] != "precision":
                continue
            manual = np.mean(
                [float(x["precision"]) for x in raw if x["resampling_label"] == r["resampling_label"]]
            )
            assert abs(float(r["mean"]) - manual) < 1e-12

    def test_two_value_mean(self, tmp_path):
        path = tmp_path / "m.csv"
        header = "graph_type,resampling_label,brier,ece,precision,recall,f1,status\n"
        path.write_text(
            header
            + "er,bootstrap,0.1,0.1,0.4,0.5,0.5,ok\n"
            + "er,bootstrap,0.1,0.1,0.6,0.5,0.5,ok\n"
        )
        rows = summarize(path, ["resampling_label"])
        precision = [r for r in rows if r["metric"] == "precision"][0]
        assert float(precision["mean"]) == 0.5
        assert precision["count"] == "2"
        expected_se = np.std([0.4, 0.6], ddof=1) / math.sqrt(2)
        assert abs(float(precision["stderr"]) - expected_se) < 1e-12

    def test_unknown_column_rejected(self, tmp_path):
        path = self.make_metrics(tmp_path)
        with pytest.raises(ConfigurationError):
            summarize(path, ["nope"])

    def test_write_summary_csv(self, tmp_path):
        path = self.make_metrics(tmp_path)
        rows = summarize(path, ["resampling_label"])
        out = tmp_path / "summary.csv"
        write_summary_csv(rows, ["resampling_label"], out)
        lines = out.read_text().splitlines()
        assert lines[0] == "resampling_label,metric,mean,stderr,count"
        assert len(lines) == len(rows) + 1


class TestPreset:
    def test_paper_grid_shape(self):
        config = paper_grid_preset()
        assert len(config.graph_specs) == 8
        v20 = [e for e in config.graph_specs if e.spec.num_vertices == 20]
        v100 = [e for e in config.graph_specs if e.spec.num_vertices == 100]
        assert all(e.num_graphs == 250 for e in v20)
        assert all(e.num_graphs == 50 for e in v100)
        assert config.sample_sizes == [40, 80, 160, 320, 640, 1280, 2560, 5120, 10240]
        assert [p.label for p in config.resample_plans] == [
            "none",
            "bootstrap",
            "bootstrap-ess",
            "subsample-50",
            "subsample-90",
        ]
        assert all(p.replicates == 100 for p in config.resample_plans if p.label != "none")
        assert config.penalty_discounts == [1.0, 2.0]
        assert [a.value for a in config.algorithms] == ["boss", "hillclimb"]

    def test_slice_filters(self):
        config = apply_slice(
            paper_grid_preset(),
            "graph_type=er,num_vertices=20,avg_degree=2,n=40|80,plans=bootstrap-ess|none,"
            "c=1,alg=boss,true_graphs=3",
        )
        assert len(config.graph_specs) == 1
        assert config.graph_specs[0].num_graphs == 3
        assert config.sample_sizes == [40, 80]
        assert [p.label for p in config.resample_plans] == ["none", "bootstrap-ess"]
        assert config.penalty_discounts == [1.0]
        assert [a.value for a in config.algorithms] == ["boss"]

    def test_empty_slice_rejected(self):
        with pytest.raises(ConfigurationError):
            apply_slice(paper_grid_preset(), "n=77")

    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigurationError):
            apply_slice(paper_grid_preset(), "bogus=1")


class TestConfigIo:
    def test_roundtrip(self, tmp_path):
        config = tiny_config(tmp_path / "out")
        data = config_to_dict(config)
        back = config_from_dict(json.loads(json.dumps(data)))
        assert config_to_dict(back) == data

    def test_load_config(self, tmp_path):
        config = tiny_config(tmp_path / "out")
        path = tmp_path / "config.json"
        path.write_text(json.dumps(config_to_dict(config)))
        assert config_to_dict(load_config(path)) == config_to_dict(config)

    def test_invalid_config_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"graph_specs": []}')
        with pytest.raises(ConfigurationError):
            load_config(path)


class TestWorkers:
    def test_cli_beats_env(self, monkeypatch):
        monkeypatch.setenv("CAUSAL_RESAMPLE_WORKERS", "5")
        assert resolve_workers(None, cli_workers=3) == 3

    def test_env_beats_config(self, monkeypatch):
        monkeypatch.setenv("CAUSAL_RESAMPLE_WORKERS", "5")
        assert resolve_workers(2) == 5

    def test_config_beats_default(self, monkeypatch):
        monkeypatch.delenv("CAUSAL_RESAMPLE_WORKERS", raising=False)
        assert resolve_workers(2) == 2

    def test_bad_env_rejected(self, monkeypatch):
        monkeypatch.setenv("CAUSAL_RESAMPLE_WORKERS", "lots")
        with pytest.raises(ConfigurationError):
            resolve_workers(None)


class TestNullLrt:
    def test_shape_and_range(self):
        p = null_lrt_pvalues(200, 50, master_seed=1)
        assert p.shape == (50, 2)
        assert np.all((p >= 0) & (p <= 1))

    def test_deterministic(self):
        a = null_lrt_pvalues(100, 20, master_seed=9)
        b = null_lrt_pvalues(100, 20, master_seed=9)
        assert np.array_equal(a, b)

    def test_raw_pvalues_skew_low(self):
        p = null_lrt_pvalues(500, 400, master_seed=2)
        assert p[:, 1].mean() < p[:, 0].mean()

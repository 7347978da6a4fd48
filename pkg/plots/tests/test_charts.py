import csv

import numpy as np
import pytest

from resample_plots.charts import (
    ChartDataError,
    PlotSpec,
    render,
    render_pvalue_hist,
)
from resample_plots.cli import main

from conftest import write_metrics_csv


def write_pvalues(path, reps=4000, seed=1):
    import math

    rng = np.random.default_rng(seed)
    lam = rng.standard_normal(reps) ** 2
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["rep", "p_ess", "p_raw"])
        for i, x in enumerate(lam):
            p_ess = math.erfc(math.sqrt(x / 2.0))
            p_raw = math.erfc(math.sqrt(x))
            writer.writerow([i, repr(p_ess), repr(p_raw)])
    return path


class TestRender:
    def test_single_series(self, tmp_path):
        path = write_metrics_csv(tmp_path / "m.csv", plans=("bootstrap-ess",), penalties=(1.0,))
        out = tmp_path / "f1.svg"
        result = render(path, PlotSpec(metric="f1"), out)
        assert out.exists() and out.stat().st_size > 0
        assert result.series_per_facet == 1
        text = out.read_text()
        assert "<svg" in text
        assert "sample size" in text
        assert "bootstrap-ess, c=1" in text

    def test_full_series_legend(self, metrics_csv, tmp_path):
        out = tmp_path / "f1.svg"
        result = render(metrics_csv, PlotSpec(metric="f1"), out)
        assert result.series_per_facet == 10  # 5 plans x 2 penalties
        text = out.read_text()
        for plan in ("none", "bootstrap", "bootstrap-ess", "subsample-50", "subsample-90"):
            assert f"{plan}, c=1" in text
            assert f"{plan}, c=2" in text

    def test_deterministic_output(self, metrics_csv, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        render(metrics_csv, PlotSpec(metric="brier"), a)
        render(metrics_csv, PlotSpec(metric="brier"), b)
        assert a.read_bytes() == b.read_bytes()

    def test_missing_column_named(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("sample_size,resampling_label\n100,none\n")
        with pytest.raises(ChartDataError, match="penalty_discount"):
            render(path, PlotSpec(metric="f1"), tmp_path / "x.svg")

    def test_empty_selection_rejected(self, metrics_csv, tmp_path):
        spec = PlotSpec(metric="f1", facet={"num_vertices": "999"})
        with pytest.raises(ChartDataError, match="no data"):
            render(metrics_csv, spec, tmp_path / "x.svg")

    def test_unknown_metric_rejected(self):
        with pytest.raises(ChartDataError):
            PlotSpec(metric="accuracy")

    def test_facet_filter(self, metrics_csv, tmp_path):
        spec = PlotSpec(metric="recall", facet={"graph_type": "erdos-renyi", "num_vertices": "20"})
        result = render(metrics_csv, spec, tmp_path / "r.svg")
        assert len(result.facets) == 1

    def test_summary_csv_input(self, metrics_csv, tmp_path):
        # Reduce the raw CSV to the summarize() schema and render from that.
        import pandas as pd

        frame = pd.read_csv(metrics_csv)
        rows = []
        for (n, plan, c), group in frame.groupby(
            ["sample_size", "resampling_label", "penalty_discount"]
        ):
            for metric in ("f1", "precision"):
                values = group[metric].astype(float)
                rows.append(
                    {
                        "sample_size": n,
                        "resampling_label": plan,
                        "penalty_discount": c,
                        "metric": metric,
                        "mean": values.mean(),
                        "stderr": values.std(ddof=1) / np.sqrt(len(values)),
                        "count": len(values),
                    }
                )
        summary = tmp_path / "summary.csv"
        pd.DataFrame(rows).to_csv(summary, index=False)
        result = render(summary, PlotSpec(metric="f1"), tmp_path / "s.svg")
        assert result.series_per_facet == 10

    def test_png_output(self, metrics_csv, tmp_path):
        out = tmp_path / "f1.png"
        render(metrics_csv, PlotSpec(metric="f1"), out, png=True)
        assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


class TestPvalueHist:
    def test_uniform_column_is_flat(self, tmp_path):
        # Uniform draws: every bin within 4 sigma of the expected count.
        reps, bins = 5000, 20
        rng = np.random.default_rng(7)
        path = tmp_path / "p.csv"
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["rep", "p_ess", "p_raw"])
            for i in range(reps):
                writer.writerow([i, repr(float(rng.random())), repr(float(rng.random() ** 2))])
        result = render_pvalue_hist(path, tmp_path / "h.svg", bins=bins)
        expected = reps / bins
        sigma = np.sqrt(reps * (1 / bins) * (1 - 1 / bins))
        assert np.max(np.abs(result.ess_counts - expected)) < 4 * sigma

    def test_constant_column_fills_one_bin(self, tmp_path):
        path = tmp_path / "p.csv"
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["rep", "p_ess", "p_raw"])
            for i in range(50):
                writer.writerow([i, "0.0", "0.0"])
        result = render_pvalue_hist(path, tmp_path / "h.svg")
        assert result.ess_counts[0] == 50
        assert result.ess_counts[1:].sum() == 0

    def test_missing_column_named(self, tmp_path):
        path = tmp_path / "p.csv"
        path.write_text("rep,p_ess\n0,0.5\n")
        with pytest.raises(ChartDataError, match="p_raw"):
            render_pvalue_hist(path, tmp_path / "h.svg")

    def test_deterministic(self, tmp_path):
        path = write_pvalues(tmp_path / "p.csv")
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        render_pvalue_hist(path, a)
        render_pvalue_hist(path, b)
        assert a.read_bytes() == b.read_bytes()


class TestCli:
    def test_render_command(self, metrics_csv, tmp_path, capsys):
        out = tmp_path / "f1.svg"
        code = main(["render", "--metrics", str(metrics_csv), "--metric", "f1", "--out", str(out)])
        assert code == 0
        assert out.exists()
        assert "wrote" in capsys.readouterr().out

    def test_render_with_facet(self, metrics_csv, tmp_path):
        out = tmp_path / "f1.svg"
        code = main(
            [
                "render",
                "--metrics",
                str(metrics_csv),
                "--metric",
                "precision",
                "--out",
                str(out),
                "--facet",
                "graph_type=erdos-renyi",
            ]
        )
        assert code == 0

    def test_pvalues_command(self, tmp_path, capsys):
        path = write_pvalues(tmp_path / "p.csv", reps=500)
        out = tmp_path / "fig2.svg"
        code = main(["pvalues", "--input", str(path), "--out", str(out)])
        assert code == 0
        assert out.exists()

    def test_bad_input_is_usage_error(self, tmp_path, capsys):
        path = tmp_path / "m.csv"
        path.write_text("a,b\n1,2\n")
        code = main(["render", "--metrics", str(path), "--metric", "f1", "--out", str(tmp_path / "x.svg")])
        assert code == 2
        assert "error:" in capsys.readouterr().err

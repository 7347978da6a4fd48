import csv
import math
from pathlib import Path

import numpy as np
import pytest

PLANS = ("none", "bootstrap", "bootstrap-ess", "subsample-50", "subsample-90")


def write_metrics_csv(path: Path, plans=PLANS, penalties=(1.0, 2.0),
                      sample_sizes=(40, 160, 640, 2560, 10240), graphs=3, seed=0) -> Path:
    """Synthetic metrics.csv in the runner's result-row schema."""
    rng = np.random.default_rng(seed)
    header = [
        "graph_type", "num_vertices", "avg_degree", "true_graph_id", "sample_size",
        "resampling_label", "penalty_discount", "algorithm", "brier", "ece",
        "precision", "recall", "f1", "runtime_ms", "seed_path", "status",
    ]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for gid in range(graphs):
            for n in sample_sizes:
                for pi, plan in enumerate(plans):
                    for c in penalties:
                        base = 0.6 + 0.3 * (math.log2(n / 40) / 8) + 0.02 * pi
                        noise = rng.normal(0, 0.02)
                        f1 = min(1.0, max(0.0, base + noise))
                        precision = min(1.0, f1 + 0.05)
                        recall = max(0.0, f1 - 0.05)
                        brier = max(0.001, 0.1 - 0.01 * math.log2(n / 40) + rng.normal(0, 0.003))
                        ece = max(0.001, brier / 2)
                        writer.writerow([
                            "erdos-renyi", "20", "2.0", gid, n, plan, repr(c), "boss",
                            repr(brier), repr(ece), repr(precision), repr(recall), repr(f1),
                            "", f"0.{gid}.{n}.{pi}:deadbeef", "ok",
                        ])
    return path


@pytest.fixture
def metrics_csv(tmp_path):
    return write_metrics_csv(tmp_path / "metrics.csv")

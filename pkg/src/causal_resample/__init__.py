"""Resampling-based validation of score-based causal discovery.

Simulates data from known random DAGs, learns graph ensembles from
bootstrapped or subsampled datasets under penalty-discounted BIC scoring,
and quantifies edge-recovery accuracy and probabilistic calibration.
"""

from .errors import ConfigurationError, DataError, ScoringError, StructuralError
from .graphs import (
    Dag,
    GraphSpec,
    GraphType,
    adjacency_pairs,
    generate_dag,
    generate_er_dag,
    generate_sf_dag,
    read_edge_list,
    topological_order,
    write_edge_list,
)
from .metrics import (
    EdgeFrequencyTable,
    MetricsRecord,
    brier,
    ece,
    edge_frequencies,
    evaluate,
    prf,
)
from .resample import (
    ResampleKind,
    ResamplePlan,
    bootstrap,
    bootstrap_plan,
    effective_sample_size,
    no_resampling,
    resample,
    subsample,
    subsample_plan,
)
from .runner import (
    ExperimentConfig,
    GraphGridEntry,
    RunResult,
    apply_slice,
    derive_seed,
    load_config,
    null_lrt_pvalues,
    paper_grid_preset,
    run_cell,
    run_experiment,
    summarize,
)
from .scoring import (
    ScoreConfig,
    SufficientStats,
    chi2_survival_1df,
    delta_bic,
    ess_doubling_identity_check,
    graph_bic,
    local_bic,
    lrt_pvalue,
    residual_variance,
    sufficient_stats,
)
from .search import (
    Algorithm,
    InitialOrder,
    ScoreCache,
    SearchConfig,
    boss_search,
    greedy_hill_climb,
    grow_shrink,
    project_order,
    run_search,
)
from .simulate import Dataset, SemModel, implied_covariance, parameterize, simulate, standardize

__version__ = "0.1.0"

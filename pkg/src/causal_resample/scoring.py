"""Gaussian sufficient statistics and penalty-discounted BIC scoring.

All likelihood and penalty terms use ``score_n``: the raw (weighted) row
count, or the Kish effective sample size when a bootstrap plan asks for the
adjustment. Raw and effective counts are never mixed within one score; the
effective count enters the likelihood and the penalty together.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConfigurationError, DataError, ScoringError
from .resample import effective_sample_size
from .simulate import Dataset

LOG_2PI = math.log(2.0 * math.pi)
DEFAULT_RIDGE = 1e-8


@dataclass(frozen=True)
class SufficientStats:
    """Weighted MLE covariance plus the sample counts scoring runs on."""

    cov: np.ndarray
    n_raw: float
    n_eff: float

    @property
    def score_n(self) -> float:
        return self.n_eff

    @property
    def num_vars(self) -> int:
        return self.cov.shape[0]


@dataclass(frozen=True)
class ScoreConfig:
    """penalty_discount multiplies the BIC complexity penalty; ridge
    regularizes near-singular parent blocks (bootstrap duplication and small
    subsamples can make them rank-deficient)."""

    penalty_discount: float = 1.0
    ridge: float = DEFAULT_RIDGE

    def __post_init__(self):
        if self.penalty_discount <= 0:
            raise ConfigurationError(
                f"penalty_discount must be positive, got {self.penalty_discount}"
            )
        if self.ridge < 0:
            raise ConfigurationError(f"ridge must be nonnegative, got {self.ridge}")


def sufficient_stats(data: Dataset, ess_adjust: bool = False) -> SufficientStats:
    """Mean-centered MLE covariance (1/n denominator), frequency weighted
    when the dataset carries bootstrap weights."""
    x = data.values
    if data.weights is None:
        n = x.shape[0]
        if n < 2:
            raise DataError(f"need at least 2 rows, got {n}")
        centered = x - x.mean(axis=0)
        cov = centered.T @ centered / n
        return SufficientStats(cov=cov, n_raw=float(n), n_eff=float(n))
    w = data.weights.astype(np.float64)
    if np.count_nonzero(w) < 2:
        raise DataError("need at least 2 rows with positive weight")
    total = w.sum()
    mean = (w @ x) / total
    centered = x - mean
    cov = (centered * w[:, None]).T @ centered / total
    n_eff = effective_sample_size(data.weights) if ess_adjust else float(total)
    return SufficientStats(cov=cov, n_raw=float(total), n_eff=n_eff)


def residual_variance(
    stats: SufficientStats, v: int, parents: Sequence[int], ridge: float = DEFAULT_RIDGE
) -> float:
    """MLE residual variance of v regressed on a parent set, via Cholesky of
    the ridge-stabilized parent block.

    Raises ScoringError when the set cannot be scored (non-PD block, too many
    parents for score_n, degenerate variance); callers treat such parent sets
    as rejected rather than fatal.
    """
    pa = sorted(parents)
    if v in pa:
        raise ConfigurationError(f"vertex {v} cannot be its own parent")
    s = stats.cov
    if len(pa) >= stats.score_n - 1:
        raise ScoringError(f"{len(pa)} parents is too many for score_n={stats.score_n:.3f}")
    if not pa:
        var = float(s[v, v])
    else:
        a = s[np.ix_(pa, pa)] + ridge * np.eye(len(pa))
        b = s[pa, v]
        try:
            chol = np.linalg.cholesky(a)
        except np.linalg.LinAlgError as exc:
            raise ScoringError(f"parent block for vertex {v} is not positive definite") from exc
        w = np.linalg.solve(chol, b)
        var = float(s[v, v] - w @ w)
    if var <= 0 or not math.isfinite(var):
        raise ScoringError(f"degenerate residual variance for vertex {v} given {pa}")
    return var


def gaussian_loglik(score_n: float, sigma2: float) -> float:
    """Maximized Gaussian log-likelihood of one variable with MLE residual
    variance sigma2: -(n/2) * (log(2*pi) + log(sigma2) + 1)."""
    return -0.5 * score_n * (LOG_2PI + math.log(sigma2) + 1.0)


def local_bic(
    stats: SufficientStats, v: int, parents: Sequence[int], cfg: ScoreConfig
) -> float:
    """Per-vertex BIC contribution: log-likelihood minus
    penalty_discount * (|parents|/2) * log(score_n)."""
    sigma2 = residual_variance(stats, v, parents, ridge=cfg.ridge)
    n = stats.score_n
    return gaussian_loglik(n, sigma2) - cfg.penalty_discount * 0.5 * len(parents) * math.log(n)


def graph_bic(stats: SufficientStats, dag, cfg: ScoreConfig) -> float:
    """Total BIC of a DAG: exact sum (math.fsum) of the local scores."""
    return math.fsum(
        local_bic(stats, v, dag.parents(v), cfg) for v in range(dag.num_vertices)
    )


def delta_bic(
    stats: SufficientStats, sigma_no: float, sigma_yes: float, cfg: ScoreConfig
) -> float:
    """BIC difference between nested single-edge models, positive when the
    model with the edge is preferred.

    sigma_no and sigma_yes are residual standard deviations of the child
    without and with the candidate parent.
    """
    _check_sigmas(sigma_no, sigma_yes)
    n = stats.score_n
    return n * (math.log(sigma_no) - math.log(sigma_yes)) - cfg.penalty_discount * 0.5 * math.log(n)


def lrt_pvalue(stats: SufficientStats, sigma_no: float, sigma_yes: float) -> float:
    """Likelihood-ratio test p-value for a single-edge comparison;
    the statistic 2*n*(log sigma_no - log sigma_yes) is chi-square with one
    degree of freedom under the null."""
    _check_sigmas(sigma_no, sigma_yes)
    lam = 2.0 * stats.score_n * (math.log(sigma_no) - math.log(sigma_yes))
    return chi2_survival_1df(lam)


def chi2_survival_1df(lam: float) -> float:
    """Upper-tail probability of the chi-square distribution with one degree
    of freedom: erfc(sqrt(lam/2))."""
    if lam < 0:
        raise ConfigurationError(f"test statistic must be nonnegative, got {lam}")
    return math.erfc(math.sqrt(0.5 * lam))


def ess_doubling_identity_check(n: float, dl: float, c: float) -> tuple[float, float]:
    """Compare scoring at the idealized bootstrap effective sample size n/2
    with penalty c against scoring at the raw n with penalty 2c.

    Returns (2 * delta_ess, delta_raw_2c); the two differ by exactly
    c * log(2), so the halved-sample-size score is the doubled-penalty score
    up to a constant offset.
    """
    if n <= 1:
        raise ConfigurationError(f"n must exceed 1, got {n}")
    if dl < 0:
        raise ConfigurationError(f"log-likelihood ratio term must be nonnegative, got {dl}")
    half = 0.5 * n
    delta_ess = half * dl - 0.5 * c * math.log(half)
    delta_raw_2c = n * dl - c * math.log(n)
    return 2.0 * delta_ess, delta_raw_2c


def _check_sigmas(sigma_no: float, sigma_yes: float) -> None:
    if sigma_yes <= 0 or sigma_no <= 0:
        raise ConfigurationError("residual standard deviations must be positive")
    if sigma_no < sigma_yes:
        raise ConfigurationError(
            f"nested models require sigma_no >= sigma_yes, got {sigma_no} < {sigma_yes}"
        )

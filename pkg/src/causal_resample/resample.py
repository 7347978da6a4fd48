"""Resampling plans: bootstrap (stored as frequency weights), subsampling,
and the Kish effective sample size."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConfigurationError
from .simulate import Dataset


class ResampleKind(Enum):
    NONE = "none"
    BOOTSTRAP = "bootstrap"
    SUBSAMPLE = "subsample"


@dataclass(frozen=True)
class ResamplePlan:
    """One of: no resampling, bootstrap (optionally scored at the effective
    sample size), or fractional subsampling without replacement."""

    kind: ResampleKind
    replicates: int = 100
    ess_adjust: bool = False
    fraction: float | None = None

    def __post_init__(self):
        if self.replicates < 1:
            raise ConfigurationError(f"replicates must be positive, got {self.replicates}")
        if self.kind is ResampleKind.SUBSAMPLE:
            if self.fraction is None or not (0.0 < self.fraction < 1.0):
                raise ConfigurationError(f"subsample fraction must be in (0,1), got {self.fraction}")
            if self.ess_adjust:
                raise ConfigurationError("ess_adjust applies to bootstrap plans only")
        elif self.fraction is not None:
            raise ConfigurationError("fraction is meaningful only for subsampling")
        if self.kind is ResampleKind.NONE:
            if self.ess_adjust:
                raise ConfigurationError("ess_adjust applies to bootstrap plans only")
            if self.replicates != 1:
                raise ConfigurationError("the no-resampling plan runs exactly one replicate")

    @property
    def label(self) -> str:
        if self.kind is ResampleKind.NONE:
            return "none"
        if self.kind is ResampleKind.BOOTSTRAP:
            return "bootstrap-ess" if self.ess_adjust else "bootstrap"
        return f"subsample-{int(round(self.fraction * 100))}"


def no_resampling() -> ResamplePlan:
    return ResamplePlan(kind=ResampleKind.NONE, replicates=1)


def bootstrap_plan(ess_adjust: bool, replicates: int = 100) -> ResamplePlan:
    return ResamplePlan(kind=ResampleKind.BOOTSTRAP, replicates=replicates, ess_adjust=ess_adjust)


def subsample_plan(fraction: float, replicates: int = 100) -> ResamplePlan:
    return ResamplePlan(kind=ResampleKind.SUBSAMPLE, replicates=replicates, fraction=fraction)


def bootstrap(data: Dataset, rng: np.random.Generator) -> Dataset:
    """Resample n rows uniformly with replacement, stored compactly as
    multiplicity weights over the original rows (sum of weights = n)."""
    if data.weights is not None:
        raise ConfigurationError("cannot bootstrap an already-weighted dataset")
    n = data.num_rows
    if n < 1:
        raise ConfigurationError("cannot bootstrap an empty dataset")
    counts = np.bincount(rng.integers(0, n, size=n), minlength=n)
    return Dataset(values=data.values, weights=counts)


def subsample(data: Dataset, fraction: float, rng: np.random.Generator) -> Dataset:
    """Draw round(fraction * n) distinct rows uniformly without replacement."""
    if data.weights is not None:
        raise ConfigurationError("cannot subsample an already-weighted dataset")
    if not (0.0 < fraction < 1.0):
        raise ConfigurationError(f"fraction must be in (0,1), got {fraction}")
    n = data.num_rows
    m = int(np.floor(fraction * n + 0.5))  # round half up
    if m == 0:
        raise ConfigurationError(f"fraction {fraction} of {n} rows rounds to zero")
    m = min(m, n - 1)  # keep the subsample strictly smaller than the input
    if m < 1:
        raise ConfigurationError("cannot subsample a single-row dataset")
    idx = np.sort(rng.choice(n, size=m, replace=False))
    return Dataset(values=data.values[idx])


def resample(data: Dataset, plan: ResamplePlan, rng: np.random.Generator) -> Dataset:
    if plan.kind is ResampleKind.NONE:
        return data
    if plan.kind is ResampleKind.BOOTSTRAP:
        return bootstrap(data, rng)
    return subsample(data, plan.fraction, rng)


def effective_sample_size(weights: np.ndarray) -> float:
    """Kish effective sample size (sum w)^2 / (sum w^2)."""
    w = np.asarray(weights, dtype=np.float64)
    if np.any(w < 0):
        raise ConfigurationError("weights must be nonnegative")
    total = w.sum()
    if total <= 0:
        raise ConfigurationError("weights must not all be zero")
    return float(total * total / np.square(w).sum())

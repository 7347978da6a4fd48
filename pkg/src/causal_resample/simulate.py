"""Linear-Gaussian SEM parameterization and sampling.

A DAG is parameterized with edge coefficients drawn uniformly from
+/-[0.2, 1.0] and unit error variances, then rescaled vertex-by-vertex in
topological order so that every variable has implied variance exactly 1.
The resulting implied covariance matrix is therefore a correlation matrix
faithful to the DAG (up to the coefficient floor, which keeps edges away
from zero strength).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigurationError, StructuralError
from .graphs import Dag, topological_order

COEF_LOW = 0.2
COEF_HIGH = 1.0


@dataclass(frozen=True)
class SemModel:
    """Linear-Gaussian SEM: X_v = sum_p beta[p, v] * X_p + eps_v.

    beta[p, v] is the coefficient of parent p on child v and is zero wherever
    (p, v) is not an edge of the DAG; eps_v ~ Normal(0, error_var[v]).
    """

    dag: Dag
    beta: np.ndarray
    error_var: np.ndarray

    def __post_init__(self):
        v = self.dag.num_vertices
        if self.beta.shape != (v, v):
            raise StructuralError(f"beta must be {v}x{v}, got {self.beta.shape}")
        if self.error_var.shape != (v,):
            raise StructuralError(f"error_var must have length {v}")
        if np.any(self.error_var <= 0):
            raise StructuralError("error variances must be positive")
        nz = set(zip(*np.nonzero(self.beta)))
        extra = {(int(p), int(c)) for p, c in nz} - self.dag.edges
        if extra:
            raise StructuralError(f"nonzero coefficients off the DAG: {sorted(extra)}")


@dataclass(frozen=True)
class Dataset:
    """An n x v sample matrix with optional integer frequency weights.

    Weights are the compact representation of resampling with replacement:
    row i appears weights[i] times. Unweighted datasets have weights=None.
    """

    values: np.ndarray
    weights: np.ndarray | None = None

    def __post_init__(self):
        if self.values.ndim != 2:
            raise ConfigurationError("values must be a 2-d matrix")
        if self.weights is not None:
            if self.weights.shape != (self.values.shape[0],):
                raise ConfigurationError("weights length must match the row count")
            if np.any(self.weights < 0):
                raise ConfigurationError("weights must be nonnegative")

    @property
    def num_rows(self) -> int:
        return self.values.shape[0]

    @property
    def num_vars(self) -> int:
        return self.values.shape[1]


def parameterize(dag: Dag, rng: np.random.Generator) -> SemModel:
    """Draw raw coefficients uniformly from +/-[COEF_LOW, COEF_HIGH] with unit
    error variances, then standardize so all implied variances equal 1."""
    v = dag.num_vertices
    beta = np.zeros((v, v))
    for p, c in sorted(dag.edges):
        mag = rng.uniform(COEF_LOW, COEF_HIGH)
        sign = 1.0 if rng.random() < 0.5 else -1.0
        beta[p, c] = sign * mag
    raw = SemModel(dag=dag, beta=beta, error_var=np.ones(v))
    return standardize(raw)


def standardize(model: SemModel) -> SemModel:
    """Rescale coefficients and error variances, vertex-by-vertex in
    topological order, so every implied variance is exactly 1."""
    v = model.dag.num_vertices
    beta = model.beta.copy()
    error_var = model.error_var.copy()
    cov = np.zeros((v, v))
    for x in topological_order(model.dag):
        pa = list(model.dag.parents(x))
        if pa:
            b = beta[pa, x]
            raw_var = float(b @ cov[np.ix_(pa, pa)] @ b) + error_var[x]
        else:
            raw_var = float(error_var[x])
        scale = np.sqrt(raw_var)
        if pa:
            beta[pa, x] = beta[pa, x] / scale
        error_var[x] = error_var[x] / raw_var
        # Forward-accumulate the implied covariance with the rescaled column.
        if pa:
            cov[:, x] = cov[:, pa] @ beta[pa, x]
            cov[x, :] = cov[:, x]
        cov[x, x] = 1.0
    return SemModel(dag=model.dag, beta=beta, error_var=error_var)


def implied_covariance(model: SemModel) -> np.ndarray:
    """Model-implied covariance, computed by forward accumulation in
    topological order (no matrix inversion)."""
    v = model.dag.num_vertices
    cov = np.zeros((v, v))
    for x in topological_order(model.dag):
        pa = list(model.dag.parents(x))
        if pa:
            b = model.beta[pa, x]
            col = cov[:, pa] @ b
            var = float(b @ cov[np.ix_(pa, pa)] @ b) + model.error_var[x]
            cov[:, x] = col
            cov[x, :] = col
        else:
            var = float(model.error_var[x])
        cov[x, x] = var
    return cov


def simulate(model: SemModel, n: int, rng: np.random.Generator) -> Dataset:
    """Draw n i.i.d. rows by propagating Gaussian noise through the DAG."""
    if n < 1:
        raise ConfigurationError(f"sample count must be >= 1, got {n}")
    v = model.dag.num_vertices
    x = rng.standard_normal((n, v)) * np.sqrt(model.error_var)
    for c in topological_order(model.dag):
        pa = list(model.dag.parents(c))
        if pa:
            x[:, c] += x[:, pa] @ model.beta[pa, c]
    return Dataset(values=x)


def write_dataset_csv(data: Dataset, path: str | Path) -> None:
    """Debug persistence: header ``x0,x1,...``, one sample per line."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"x{j}" for j in range(data.num_vars)])
        for row in data.values:
            writer.writerow([repr(float(val)) for val in row])


def read_dataset_csv(path: str | Path) -> Dataset:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [[float(val) for val in row] for row in reader]
    values = np.asarray(rows, dtype=np.float64).reshape(len(rows), len(header))
    return Dataset(values=values)

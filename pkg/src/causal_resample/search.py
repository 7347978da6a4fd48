"""Score-based structure search over sufficient statistics.

Two algorithms: a permutation search (sweeps of single-vertex relocations,
each order projected to a DAG by grow-shrink parent selection against the
order prefix) and a greedy edge-wise hill climb used as a baseline.

Grow-shrink candidate selection runs in a scalar kernel that maintains a
Cholesky factor of the chosen-parent block across grow steps (JIT-compiled
when numba is present); the score of every *returned* parent set is always
recomputed through the canonical local_bic path, so search totals decompose
exactly into local scores.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import ScoringError
from .graphs import Dag
from .scoring import ScoreConfig, SufficientStats, local_bic


def _select_parents_impl(s, diag_r, x, cands, half_n, penalty, parent_cap):
    """Grow-shrink parent selection for vertex x over sorted candidates.

    Grow: repeatedly add the candidate with the largest strictly positive
    local-score gain (equivalently, the smallest residual variance), kept
    cheap by maintaining a Cholesky factor of the chosen block across steps.
    Shrink: repeatedly drop the member whose removal gains the most. Ties
    break toward the lowest vertex index. Candidates whose parent block is
    not positive definite (or whose residual variance is not positive) are
    skipped. Returns the selected vertices, sorted ascending.

    Scalar float64 arithmetic throughout; JIT-compiled when numba is
    available, with the interpreted version as the fallback.
    """
    nc = cands.shape[0]
    sxx = s[x, x]
    chosen = np.zeros(nc, dtype=np.int64)
    nch = 0
    active = cands.copy()
    nact = nc
    lmat = np.zeros((nc, nc))
    wv = np.zeros(nc)
    ztmp = np.zeros(nc)
    zbest = np.zeros(nc)
    beta = np.zeros(nc)
    ycol = np.zeros(nc)
    sigma2 = sxx

    while nact > 0 and nch + 1 < parent_cap:
        best_idx = -1
        best_sig = np.inf
        best_d = 0.0
        best_t = 0.0
        for idx in range(nact):
            q = active[idx]
            d = diag_r[q]
            t = s[x, q]
            for i in range(nch):
                zi = s[chosen[i], q]
                for jj in range(i):
                    zi -= lmat[i, jj] * ztmp[jj]
                zi /= lmat[i, i]
                ztmp[i] = zi
                d -= zi * zi
                t -= wv[i] * zi
            if d <= 0.0:
                continue
            sig = sigma2 - (t * t) / d
            if sig <= 0.0 or not sig < best_sig:
                continue
            best_idx = idx
            best_sig = sig
            best_d = d
            best_t = t
            for i in range(nch):
                zbest[i] = ztmp[i]
        if best_idx < 0:
            break
        if half_n * (math.log(sigma2) - math.log(best_sig)) - penalty <= 0.0:
            break
        q = active[best_idx]
        for i in range(nch):
            lmat[nch, i] = zbest[i]
        piv = math.sqrt(best_d)
        lmat[nch, nch] = piv
        wv[nch] = best_t / piv
        chosen[nch] = q
        nch += 1
        sigma2 = best_sig
        for ii in range(best_idx, nact - 1):
            active[ii] = active[ii + 1]
        nact -= 1

    # Sort the chosen set so shrink-phase ties also break toward the lowest
    # vertex; the grow-phase factor is stale after this, so shrink refactors.
    for a in range(1, nch):
        key = chosen[a]
        b = a - 1
        while b >= 0 and chosen[b] > key:
            chosen[b + 1] = chosen[b]
            b -= 1
        chosen[b + 1] = key

    while nch > 0:
        if nch == 1:
            worst = sxx
            if penalty - half_n * (math.log(worst) - math.log(sigma2)) <= 0.0:
                break
            nch = 0
            sigma2 = worst
            continue
        k = nch
        ok = True
        for i in range(k):
            for j in range(i + 1):
                acc = diag_r[chosen[i]] if i == j else s[chosen[i], chosen[j]]
                for m in range(j):
                    acc -= lmat[i, m] * lmat[j, m]
                if i == j:
                    if acc <= 0.0:
                        ok = False
                        break
                    lmat[i, i] = math.sqrt(acc)
                else:
                    lmat[i, j] = acc / lmat[j, j]
            if not ok:
                break
        if not ok:
            break
        for i in range(k):
            acc = s[x, chosen[i]]
            for m in range(i):
                acc -= lmat[i, m] * wv[m]
            wv[i] = acc / lmat[i, i]
        for i in range(k - 1, -1, -1):
            acc = wv[i]
            for m in range(i + 1, k):
                acc -= lmat[m, i] * beta[m]
            beta[i] = acc / lmat[i, i]
        best_j = -1
        best_sig = np.inf
        for qi in range(k):
            # Diagonal entry qi of the inverse block: squared norm of the
            # qi-th column of L^-1.
            ycol[qi] = 1.0 / lmat[qi, qi]
            mqq = ycol[qi] * ycol[qi]
            for m in range(qi + 1, k):
                acc = 0.0
                for t2 in range(qi, m):
                    acc -= lmat[m, t2] * ycol[t2]
                ycol[m] = acc / lmat[m, m]
                mqq += ycol[m] * ycol[m]
            if mqq <= 0.0:
                continue
            sig = sigma2 + (beta[qi] * beta[qi]) / mqq
            if sig < best_sig:
                best_sig = sig
                best_j = qi
        if best_j < 0:
            break
        if penalty - half_n * (math.log(best_sig) - math.log(sigma2)) <= 0.0:
            break
        for ii in range(best_j, nch - 1):
            chosen[ii] = chosen[ii + 1]
        nch -= 1
        sigma2 = best_sig

    return chosen[:nch]


try:  # pragma: no cover - exercised implicitly by every search test
    import numba

    _select_parents = numba.njit(cache=True)(_select_parents_impl)
except ImportError:  # pragma: no cover
    _select_parents = _select_parents_impl


class Algorithm(Enum):
    BOSS = "boss"
    HILL_CLIMB = "hillclimb"


class InitialOrder(Enum):
    RANDOM = "random"
    DATA_ORDER = "data-order"


@dataclass(frozen=True)
class SearchConfig:
    algorithm: Algorithm = Algorithm.BOSS
    score_config: ScoreConfig = field(default_factory=ScoreConfig)
    max_sweeps: int = 100
    initial_order: InitialOrder = InitialOrder.RANDOM

    def __post_init__(self):
        if self.max_sweeps < 1:
            raise ValueError(f"max_sweeps must be >= 1, got {self.max_sweeps}")


class ScoreCache:
    """Local-score and grow-shrink memo scoped to one (stats, config) pair.

    Cached local scores are exactly the values local_bic would return; the
    cache only removes recomputation, never changes a result. Parent
    *selection* runs in the _select_parents kernel; the score attached to
    every selected set always comes from the canonical local_bic path.
    """

    def __init__(self, stats: SufficientStats, cfg: ScoreConfig):
        self.stats = stats
        self.cfg = cfg
        self._s = np.asarray(stats.cov, dtype=np.float64)
        self._half_n = 0.5 * stats.score_n
        self._per_parent_penalty = 0.5 * cfg.penalty_discount * math.log(stats.score_n)
        self._parent_cap = stats.score_n - 1.0
        self._diag_r = np.diag(self._s) + cfg.ridge
        self._local: dict[tuple[int, tuple[int, ...]], float] = {}
        self._gs: dict[tuple[int, int], tuple[tuple[int, ...], float]] = {}

    def local_score(self, v: int, parents: tuple[int, ...]) -> float:
        """Canonical local BIC, memoized. Raises ScoringError for parent
        sets that cannot be scored (also memoized)."""
        key = (v, parents)
        val = self._local.get(key)
        if val is None:
            try:
                val = local_bic(self.stats, v, parents, self.cfg)
            except ScoringError:
                val = math.nan
            self._local[key] = val
        if math.isnan(val):
            raise ScoringError(f"unscoreable parent set {parents} for vertex {v}")
        return val

    def grow_shrink(self, v: int, predecessors: tuple[int, ...], pred_mask: int) -> tuple[tuple[int, ...], float]:
        """Memoized grow-shrink of v against a predecessor set; returns the
        selected parents (sorted) and their canonical local score."""
        key = (v, pred_mask)
        hit = self._gs.get(key)
        if hit is None:
            hit = self._grow_shrink_impl(v, predecessors)
            self._gs[key] = hit
        return hit

    def _grow_shrink_impl(self, x: int, predecessors: tuple[int, ...]) -> tuple[tuple[int, ...], float]:
        if predecessors and self._s[x, x] > 0:
            cands = np.asarray(predecessors, dtype=np.int64)
            chosen = _select_parents(
                self._s,
                self._diag_r,
                x,
                cands,
                self._half_n,
                self._per_parent_penalty,
                self._parent_cap,
            )
            parents = tuple(int(p) for p in chosen)
        else:
            parents = ()
        return parents, self.local_score(x, parents)


def grow_shrink(
    v: int,
    predecessors: Iterable[int],
    stats: SufficientStats,
    cfg: ScoreConfig,
    cache: ScoreCache | None = None,
) -> set[int]:
    """Forward-add / backward-remove parent selection for v restricted to the
    given predecessors; ties broken by lowest vertex index."""
    preds = tuple(sorted(set(predecessors)))
    if v in preds:
        raise ValueError(f"vertex {v} cannot precede itself")
    cache = cache if cache is not None else ScoreCache(stats, cfg)
    mask = _mask_of(preds)
    parents, _ = cache.grow_shrink(v, preds, mask)
    return set(parents)


def project_order(
    order: Sequence[int],
    stats: SufficientStats,
    cfg: ScoreConfig,
    cache: ScoreCache | None = None,
) -> tuple[Dag, float]:
    """Project a vertex order to a DAG by grow-shrink against each prefix;
    returns the DAG and its exact total score."""
    v = stats.num_vars
    if sorted(order) != list(range(v)):
        raise ValueError("order must be a permutation of all vertices")
    cache = cache if cache is not None else ScoreCache(stats, cfg)
    parents_by_vertex, score_by_vertex = _project_state(list(order), cache)
    dag = _dag_from_parents(v, parents_by_vertex)
    return dag, math.fsum(score_by_vertex)


def boss_search(
    stats: SufficientStats,
    cfg: SearchConfig,
    rng: np.random.Generator,
    cache: ScoreCache | None = None,
) -> Dag:
    """Best-relocation permutation search: sweep the vertices, move each to
    its best strictly-improving position (by projected total score), stop
    when a full sweep makes no move."""
    sc = cfg.score_config
    cache = cache if cache is not None else ScoreCache(stats, sc)
    v = stats.num_vars
    if cfg.initial_order is InitialOrder.RANDOM:
        order = [int(u) for u in rng.permutation(v)]
    else:
        order = list(range(v))
    if v == 1:
        return Dag(1)
    return _boss_sweeps(order, cfg, cache)


def _boss_sweeps(order: list[int], cfg: SearchConfig, cache: ScoreCache) -> Dag:
    v = len(order)
    parents_by_vertex, score_by_vertex = _project_state(order, cache)
    for _ in range(cfg.max_sweeps):
        improved = False
        for x in list(order):
            i = order.index(x)
            rho = order[:i] + order[i + 1 :]
            nslots = len(rho) + 1
            xbit = 1 << x
            pre = 0
            pre_masks = []
            for u in rho:
                pre_masks.append(pre)
                pre |= 1 << u
            pre_masks.append(pre)  # pre_masks[t] = mask of rho[:t], t in 0..v-1

            a_res = []  # rho[t] scored without x in its prefix
            b_res = []  # rho[t] scored with x in its prefix
            for t, u in enumerate(rho):
                preds_wo = rho[:t]
                a_res.append(cache.grow_shrink(u, tuple(preds_wo), pre_masks[t]))
                b_res.append(
                    cache.grow_shrink(u, tuple(preds_wo) + (x,), pre_masks[t] | xbit)
                )
            c_res = [
                cache.grow_shrink(x, tuple(rho[:k]), pre_masks[k]) for k in range(nslots)
            ]

            # Totals per insertion slot, summed in vertex-id order via fsum
            # so equal graphs always produce bitwise-equal totals.
            arr = [0.0] * v
            for t, u in enumerate(rho):
                arr[u] = a_res[t][1]
            totals = [0.0] * nslots
            arr[x] = c_res[nslots - 1][1]
            totals[nslots - 1] = math.fsum(arr)
            for k in range(nslots - 2, -1, -1):
                arr[rho[k]] = b_res[k][1]
                arr[x] = c_res[k][1]
                totals[k] = math.fsum(arr)

            best_k, best_total = i, totals[i]
            for k in range(nslots):
                if totals[k] > best_total:
                    best_k, best_total = k, totals[k]
            if best_k == i:
                continue
            order = rho[:best_k] + [x] + rho[best_k:]
            for t, u in enumerate(rho):
                res = a_res[t] if t < best_k else b_res[t]
                parents_by_vertex[u] = res[0]
                score_by_vertex[u] = res[1]
            parents_by_vertex[x] = c_res[best_k][0]
            score_by_vertex[x] = c_res[best_k][1]
            improved = True
        if not improved:
            break
    return _dag_from_parents(v, parents_by_vertex)


def greedy_hill_climb(
    stats: SufficientStats,
    cfg: SearchConfig,
    cache: ScoreCache | None = None,
) -> Dag:
    """Edge-wise greedy DAG search from the empty graph: apply the single
    best strictly-improving add/delete/reverse until a local optimum (or the
    operation budget max_sweeps * v^2 runs out)."""
    sc = cfg.score_config
    cache = cache if cache is not None else ScoreCache(stats, sc)
    v = stats.num_vars
    return _hill_climb(v, cfg, cache)


def _hill_climb(v: int, cfg: SearchConfig, cache: ScoreCache) -> Dag:
    parents: list[tuple[int, ...]] = [() for _ in range(v)]
    local: list[float] = [cache.local_score(u, ()) for u in range(v)]
    children: list[set[int]] = [set() for _ in range(v)]

    def score_or_none(u: int, pset: tuple[int, ...]) -> float | None:
        try:
            return cache.local_score(u, pset)
        except ScoringError:
            return None

    max_ops = cfg.max_sweeps * v * v
    for _ in range(max_ops):
        desc = _descendant_masks(children)
        best_delta = 0.0
        best_op: tuple | None = None
        for u in range(v):
            ubit = 1 << u
            for w in range(v):
                if u == w or u in parents[w] or w in parents[u]:
                    continue
                if desc[w] & ubit:
                    continue  # u is reachable from w: adding u->w closes a cycle
                cand = score_or_none(w, _insert(parents[w], u))
                if cand is None:
                    continue
                delta = cand - local[w]
                if delta > best_delta:
                    best_delta, best_op = delta, ("add", u, w)
        for w in range(v):
            for u in parents[w]:
                cand = score_or_none(w, _remove(parents[w], u))
                if cand is None:
                    continue
                delta = cand - local[w]
                if delta > best_delta:
                    best_delta, best_op = delta, ("delete", u, w)
        for w in range(v):
            for u in parents[w]:
                if _reaches(children, u, w, skip_edge=(u, w)):
                    continue  # another path u~>w exists: reversal closes a cycle
                cand_w = score_or_none(w, _remove(parents[w], u))
                cand_u = score_or_none(u, _insert(parents[u], w))
                if cand_w is None or cand_u is None:
                    continue
                delta = (cand_w - local[w]) + (cand_u - local[u])
                if delta > best_delta:
                    best_delta, best_op = delta, ("reverse", u, w)
        if best_op is None:
            break
        kind, u, w = best_op
        if kind == "add":
            parents[w] = _insert(parents[w], u)
            children[u].add(w)
            local[w] = cache.local_score(w, parents[w])
        elif kind == "delete":
            parents[w] = _remove(parents[w], u)
            children[u].discard(w)
            local[w] = cache.local_score(w, parents[w])
        else:
            parents[w] = _remove(parents[w], u)
            parents[u] = _insert(parents[u], w)
            children[u].discard(w)
            children[w].add(u)
            local[w] = cache.local_score(w, parents[w])
            local[u] = cache.local_score(u, parents[u])
    return _dag_from_parents(v, parents)


def run_search(
    stats: SufficientStats,
    cfg: SearchConfig,
    rng: np.random.Generator,
    cache: ScoreCache | None = None,
) -> Dag:
    if cfg.algorithm is Algorithm.BOSS:
        return boss_search(stats, cfg, rng, cache)
    return greedy_hill_climb(stats, cfg, cache)


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for u in vertices:
        mask |= 1 << u
    return mask


def _insert(pset: tuple[int, ...], u: int) -> tuple[int, ...]:
    return tuple(sorted(pset + (u,)))


def _remove(pset: tuple[int, ...], u: int) -> tuple[int, ...]:
    return tuple(p for p in pset if p != u)


def _project_state(order: list[int], cache: ScoreCache):
    v = len(order)
    parents_by_vertex: list[tuple[int, ...]] = [()] * v
    score_by_vertex = [0.0] * v
    mask = 0
    for t, u in enumerate(order):
        parents_u, score_u = cache.grow_shrink(u, tuple(order[:t]), mask)
        parents_by_vertex[u] = parents_u
        score_by_vertex[u] = score_u
        mask |= 1 << u
    return parents_by_vertex, score_by_vertex


def _dag_from_parents(v: int, parents_by_vertex: Sequence[tuple[int, ...]]) -> Dag:
    edges = [(p, u) for u in range(v) for p in parents_by_vertex[u]]
    return Dag(v, edges)


def _descendant_masks(children: list[set[int]]) -> list[int]:
    v = len(children)
    desc = [0] * v
    for start in range(v):
        seen = 0
        stack = list(children[start])
        while stack:
            u = stack.pop()
            ubit = 1 << u
            if seen & ubit:
                continue
            seen |= ubit
            stack.extend(children[u])
        desc[start] = seen
    return desc


def _reaches(children: list[set[int]], src: int, dst: int, skip_edge: tuple[int, int]) -> bool:
    """Is dst reachable from src when skip_edge is removed?"""
    seen = set()
    stack = [src]
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        for w in children[u]:
            if (u, w) == skip_edge:
                continue
            if w == dst:
                return True
            stack.append(w)
    return False

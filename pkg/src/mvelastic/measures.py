"""Distance dispatch: evaluate a MeasureConfig on series pairs and datasets.

``pairwise_distances``/``cross_distances`` are the workhorses behind LOOCV
and 1-NN prediction. They validate shapes once, apply the derivative
transform once per dataset where the measure calls for it, and then run the
nogil kernels over all pairs, optionally on a thread pool. Each pair writes
its own output cell, so results are identical for any thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _kernels as _k
from .core import DEPENDENT, ShapeMismatchError
from .edit_family import _per_dim_param
from .grids import DERIVATIVE_MEASURES, MeasureConfig
from .transforms import derivative_transform


def _derivative_batch(X: np.ndarray) -> np.ndarray:
    interior = ((X[:, 1:-1] - X[:, :-2]) + (X[:, 2:] - X[:, :-2]) / 2.0) / 2.0
    out = np.empty_like(X)
    out[:, 1:-1] = interior
    out[:, 0] = interior[:, 0]
    out[:, -1] = interior[:, -1]
    return out


def _pair_fn(config: MeasureConfig, n_dims: int):
    """Bind a config to a kernel call taking two (L, D) arrays."""
    m = config.measure
    dep = config.strategy == DEPENDENT
    p = float(config.p)
    band = -1 if config.window is None else int(config.window)

    if m == "l2":
        if dep:
            return lambda a, b: _k.lp_dep(a, b, 2.0)
        return lambda a, b: _k.lp_indep(a, b, 2.0, p)
    if m in ("dtw", "dtwf", "ddtw", "ddtwf"):
        if dep:
            return lambda a, b: _k.dtw_dep(a, b, band)
        return lambda a, b: _k.dtw_indep(a, b, band, p)
    if m in ("wdtw", "wddtw"):
        g = float(config.g)
        if dep:
            return lambda a, b: _k.wdtw_dep(a, b, g)
        return lambda a, b: _k.wdtw_indep(a, b, g, p)
    if m == "lcss":
        if dep:
            eps = float(np.asarray(config.epsilon, dtype=np.float64))
            return lambda a, b: 1.0 - _k.lcss_dep(a, b, eps, band) / a.shape[0]
        eps_vec = _per_dim_param(config.epsilon, n_dims, "epsilon")
        return lambda a, b: _k.lcss_indep(a, b, eps_vec, band, p)
    if m == "erp":
        gvec = _per_dim_param(config.gap, n_dims, "gap reference g")
        if dep:
            return lambda a, b: _k.erp_dep(a, b, gvec, band)
        return lambda a, b: _k.erp_indep(a, b, gvec, band, p)
    if m == "msm":
        cost = float(config.cost)
        if dep:
            return lambda a, b: _k.msm_dep(a, b, cost)
        return lambda a, b: _k.msm_indep(a, b, cost, p)
    if m == "twe":
        nu = float(config.nu)
        lam = float(config.lam)
        if dep:
            return lambda a, b: _k.twe_dep(a, b, nu, lam)
        return lambda a, b: _k.twe_indep(a, b, nu, lam, p)
    raise ValueError(f"unknown measure {m!r}")


def _prepare(X: np.ndarray, config: MeasureConfig) -> np.ndarray:
    X = np.ascontiguousarray(X, dtype=np.float64)
    if config.measure in DERIVATIVE_MEASURES:
        return _derivative_batch(X)
    return X


def compute_distance(q, c, config: MeasureConfig) -> float:
    """Distance between two series under one measure configuration."""
    q = np.ascontiguousarray(q, dtype=np.float64)
    c = np.ascontiguousarray(c, dtype=np.float64)
    if q.ndim == 1:
        q = q.reshape(-1, 1)
    if c.ndim == 1:
        c = c.reshape(-1, 1)
    if q.shape != c.shape:
        raise ShapeMismatchError(f"series shapes differ: {q.shape} vs {c.shape}")
    if config.measure in DERIVATIVE_MEASURES:
        q = derivative_transform(q)
        c = derivative_transform(c)
    return float(_pair_fn(config, q.shape[1])(q, c))


def _run_tasks(tasks, fn, n_jobs: int):
    if n_jobs <= 1 or len(tasks) < 2:
        fn(tasks)
        return
    chunks = np.array_split(np.arange(len(tasks)), n_jobs)
    with ThreadPoolExecutor(max_workers=n_jobs) as pool:
        futures = [
            pool.submit(fn, [tasks[i] for i in idx]) for idx in chunks if len(idx)
        ]
        for f in futures:
            f.result()


def pairwise_distances(X, config: MeasureConfig, n_jobs: int = 1) -> np.ndarray:
    """Symmetric distance matrix over the series of a collection.

    Parameters
    ----------
    X : np.ndarray
        Collection of shape (n, L, D).
    config : MeasureConfig
        Measure, strategy and parameters to evaluate.
    n_jobs : int
        Worker threads; results are identical for any value.
    """
    X = _prepare(X, config)
    n = X.shape[0]
    fn = _pair_fn(config, X.shape[2])
    out = np.zeros((n, n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def work(chunk):
        for i, j in chunk:
            out[i, j] = fn(X[i], X[j])

    _run_tasks(pairs, work, n_jobs)
    out += out.T
    return out


def cross_distances(Q, X, config: MeasureConfig, n_jobs: int = 1) -> np.ndarray:
    """Distance matrix between two collections: entry (i, j) = d(Q[i], X[j])."""
    Q = _prepare(Q, config)
    X = _prepare(X, config)
    if Q.shape[1:] != X.shape[1:]:
        raise ShapeMismatchError(
            f"collections differ in series shape: {Q.shape[1:]} vs {X.shape[1:]}"
        )
    fn = _pair_fn(config, X.shape[2])
    out = np.zeros((Q.shape[0], X.shape[0]))
    pairs = [(i, j) for i in range(Q.shape[0]) for j in range(X.shape[0])]

    def work(chunk):
        for i, j in chunk:
            out[i, j] = fn(Q[i], X[j])

    _run_tasks(pairs, work, n_jobs)
    return out

"""Edit-distance-derived measures: LCSS, ERP, MSM and TWE.

Apart from LCSS (which maximizes a match count over 0-initialized
boundaries), all measures share DTW's boundary conditions: Delta(0,0)=0 and
+inf first row/column, so the first points of both series are always
aligned.
"""

from __future__ import annotations

import numpy as np

from . import _kernels as _k
from .core import DEPENDENT, INDEPENDENT, ShapeMismatchError, check_strategy
from .dtw_family import _as_band, _check_pair


class GapDimensionError(ShapeMismatchError):
    """Raised when an ERP gap vector does not match the series dimensions."""


def _per_dim_param(value, n_dims: int, name: str) -> np.ndarray:
    """Broadcast a scalar parameter to a per-dimension vector, or validate one."""
    arr = np.asarray(value, dtype=np.float64)
    if arr.ndim == 0:
        return np.full(n_dims, float(arr))
    if arr.ndim != 1 or arr.shape[0] != n_dims:
        raise GapDimensionError(
            f"{name} must be a scalar or a length-{n_dims} vector, got shape {arr.shape}"
        )
    return np.ascontiguousarray(arr)


def lcss_multivariate(q, c, epsilon, window: int | None = None,
                      strategy: str = INDEPENDENT, p: float = 1.0) -> float:
    """Longest-common-subsequence distance, normalized to [0, 1] per dimension.

    Two points match when their difference is within ``epsilon`` (absolute
    difference per dimension for the independent form; *squared* L2 distance
    between whole points for the dependent form) and their index offset is
    within the window. The distance is ``1 - count / L``; independent results
    are combined with a p-norm, so the independent value lies in [0, D] at
    p=1.

    Parameters
    ----------
    epsilon : float or array-like
        Match threshold. The independent form accepts one value per
        dimension; the dependent form takes a single scalar compared against
        the squared L2 point distance.
    """
    Q, C = _check_pair(q, c)
    band = _as_band(window)
    L = Q.shape[0]
    if check_strategy(strategy) == DEPENDENT:
        eps = float(np.asarray(epsilon, dtype=np.float64))
        count = _k.lcss_dep(Q, C, eps, band)
        return float(1.0 - count / L)
    eps = _per_dim_param(epsilon, Q.shape[1], "epsilon")
    if (eps < 0).any():
        raise ValueError("epsilon must be non-negative")
    return float(_k.lcss_indep(Q, C, eps, band, p))


def erp_multivariate(q, c, g=0.0, window: int | None = None,
                     strategy: str = INDEPENDENT, p: float = 1.0) -> float:
    """Edit distance with real penalty.

    Aligned points cost their squared difference; a gap substitutes the
    reference value ``g``, costing the squared difference to it. ``g`` may be
    a scalar or a per-dimension vector; the dependent form measures gaps as
    squared L2 distances to the whole gap vector.
    """
    Q, C = _check_pair(q, c)
    band = _as_band(window)
    gvec = _per_dim_param(g, Q.shape[1], "gap reference g")
    if check_strategy(strategy) == DEPENDENT:
        return float(_k.erp_dep(Q, C, gvec, band))
    return float(_k.erp_indep(Q, C, gvec, band, p))


def msm_cost_univariate(new: float, x: float, y: float, c: float) -> float:
    """Split/merge cost for scalar values: c when ``new`` lies between
    ``x`` and ``y`` (inclusive), else c plus the distance to the nearer one."""
    return float(_k.msm_cost_uni(float(new), float(x), float(y), float(c)))


def msm_cost_multivariate(new, x, y, c: float) -> float:
    """Split/merge cost for D-dimensional points.

    ``new`` counts as between ``x`` and ``y`` when it lies inside the
    hypersphere whose diameter is the segment joining them: with
    ``mid = (x + y) / 2``, the cost is c if ``||mid - new|| <= ||x - y|| / 2``
    and ``c + min(||new - x||, ||new - y||)`` otherwise. For D=1 this
    reproduces :func:`msm_cost_univariate` exactly.
    """
    new = np.ascontiguousarray(new, dtype=np.float64).reshape(-1)
    x = np.ascontiguousarray(x, dtype=np.float64).reshape(-1)
    y = np.ascontiguousarray(y, dtype=np.float64).reshape(-1)
    if not (new.shape == x.shape == y.shape):
        raise ShapeMismatchError(
            f"points differ in dimension: {new.shape}, {x.shape}, {y.shape}"
        )
    return float(_k.msm_cost_dep(new, x, y, float(c)))


def msm_multivariate(q, c, cost: float = 1.0, strategy: str = INDEPENDENT,
                     p: float = 1.0) -> float:
    """Move-split-merge distance.

    Moves cost the absolute difference (independent / univariate) or the
    squared L2 distance between points (dependent); splits and merges cost
    ``cost`` plus, when the new point is not between its neighbours, the
    distance to the nearer neighbour (hypersphere test in the dependent
    form).
    """
    if cost <= 0:
        raise ValueError(f"split/merge cost must be > 0, got {cost}")
    Q, C = _check_pair(q, c)
    if check_strategy(strategy) == DEPENDENT:
        return float(_k.msm_dep(Q, C, cost))
    return float(_k.msm_indep(Q, C, cost, p))


def twe_multivariate(q, c, nu: float = 1e-3, lam: float = 1.0,
                     strategy: str = INDEPENDENT, p: float = 1.0) -> float:
    """Time-warp-edit distance.

    A match costs the squared differences of the current and previous point
    pairs plus ``2 * nu``; deleting from either series costs the squared step
    within that series plus ``nu + lam``. Both series are implicitly prefixed
    with an all-zero point so the costs are defined at index 1. ``nu``
    (stiffness) interpolates between Lp-like rigidity at 0 and DTW-like
    elasticity; ``lam`` is the deletion penalty.
    """
    if nu < 0 or lam < 0:
        raise ValueError("nu and lam must be non-negative")
    Q, C = _check_pair(q, c)
    if check_strategy(strategy) == DEPENDENT:
        return float(_k.twe_dep(Q, C, nu, lam))
    return float(_k.twe_indep(Q, C, nu, lam, p))

"""Lp and the warping-based measures: DTW, DDTW, WDTW, WDDTW.

Every measure comes in an independent form (the univariate kernel applied
per dimension, results combined with a p-norm, sum at p=1) and a dependent
form (one DP over both series with squared-L2 ground costs between whole
D-dimensional points). Ground costs are squared differences; no square root
is taken at the end, so a zero-width warping window yields the squared
Euclidean distance.
"""

from __future__ import annotations

import numpy as np

from . import _kernels as _k
from .core import DEPENDENT, INDEPENDENT, ShapeMismatchError, check_strategy, validate_series
from .transforms import derivative_transform


def _as_band(window) -> int:
    """Translate a window argument (None = full, or int half-width) to a kernel band."""
    if window is None:
        return -1
    band = int(window)
    if band < 0:
        raise ValueError(f"window band must be >= 0 or None, got {window}")
    return band


def _check_pair(q, c):
    Q = validate_series(q)
    C = validate_series(c)
    if Q.shape != C.shape:
        raise ShapeMismatchError(f"series shapes differ: {Q.shape} vs {C.shape}")
    return Q, C


def lp_univariate(x, y, p: float = 2.0) -> float:
    """Minkowski distance of order p between two equal-length 1-D series."""
    Q, C = _check_pair(x, y)
    if Q.shape[1] != 1:
        raise ShapeMismatchError("lp_univariate expects univariate series")
    if p < 1.0:
        raise ValueError(f"order p must be >= 1, got {p}")
    return float(_k.lp_uni(Q[:, 0], C[:, 0], p))


def lp_multivariate(q, c, p: float = 2.0, strategy: str = INDEPENDENT,
                    combine_p: float | None = None) -> float:
    """Multivariate Lp distance under either strategy.

    The independent form takes the per-dimension Lp distances and combines
    them with a ``combine_p``-norm (default: the same p, in which case both
    strategies provably return the identical value). The dependent form takes
    the Lp norm over per-time-point Lp distances.
    """
    Q, C = _check_pair(q, c)
    if p < 1.0:
        raise ValueError(f"order p must be >= 1, got {p}")
    strategy = check_strategy(strategy)
    if strategy == DEPENDENT:
        return float(_k.lp_dep(Q, C, p))
    cp = p if combine_p is None else float(combine_p)
    if cp < 1.0:
        raise ValueError(f"combine norm must be >= 1, got {cp}")
    return float(_k.lp_indep(Q, C, p, cp))


def dtw_univariate(x, y, window: int | None = None) -> float:
    """Dynamic time warping distance between two equal-length 1-D series.

    Uses squared ground costs ``(q_i - c_j)**2``, boundary Delta(0,0)=0 with
    +inf borders, and an optional warping band: cell (i, j) is reachable iff
    ``|i - j| <= window``. ``window=None`` means no constraint; ``window=0``
    gives the one-to-one (squared Euclidean) alignment.
    """
    Q, C = _check_pair(x, y)
    if Q.shape[1] != 1:
        raise ShapeMismatchError("dtw_univariate expects univariate series")
    return float(_k.dtw_uni(Q[:, 0], C[:, 0], _as_band(window)))


def dtw_multivariate(q, c, window: int | None = None,
                     strategy: str = INDEPENDENT, p: float = 1.0) -> float:
    """Multivariate DTW under the independent or dependent strategy.

    Parameters
    ----------
    q, c : array-like
        Series of equal shape (L, D).
    window : int or None
        Warping band half-width; None means unconstrained.
    strategy : str
        'independent' runs the univariate kernel per dimension and combines
        the results with a p-norm; 'dependent' runs one DP whose ground cost
        is the squared L2 distance between whole D-dimensional points.
    p : float
        Norm order for combining per-dimension results (independent only).
    """
    Q, C = _check_pair(q, c)
    band = _as_band(window)
    if check_strategy(strategy) == DEPENDENT:
        return float(_k.dtw_dep(Q, C, band))
    return float(_k.dtw_indep(Q, C, band, p))


def wdtw_weight(delta: int, length: int, g: float) -> float:
    """Logistic warping weight for an alignment offset ``delta = |i - j|``.

    Equals ``1 / (1 + exp(-g * (delta - length) / 2))`` with the maximum
    weight fixed at 1. At g=0 every offset weighs 0.5.
    """
    if delta < 0:
        raise ValueError("delta must be >= 0")
    return float(1.0 / (1.0 + np.exp(-g * ((delta - length) / 2.0))))


def wdtw_multivariate(q, c, g: float = 0.05, strategy: str = INDEPENDENT,
                      p: float = 1.0) -> float:
    """Weighted DTW: DTW with a soft, logistic warping penalty and no band.

    Ground costs are multiplied by ``wdtw_weight(|i - j|, L, g)``; larger g
    penalises larger warpings more strongly.
    """
    Q, C = _check_pair(q, c)
    if check_strategy(strategy) == DEPENDENT:
        return float(_k.wdtw_dep(Q, C, g))
    return float(_k.wdtw_indep(Q, C, g, p))


def ddtw_multivariate(q, c, window: int | None = None,
                      strategy: str = INDEPENDENT, p: float = 1.0) -> float:
    """DTW computed on the smoothed per-dimension derivatives of both series."""
    return dtw_multivariate(
        derivative_transform(q), derivative_transform(c), window, strategy, p
    )


def wddtw_multivariate(q, c, g: float = 0.05, strategy: str = INDEPENDENT,
                       p: float = 1.0) -> float:
    """Weighted DTW computed on the smoothed per-dimension derivatives."""
    return wdtw_multivariate(
        derivative_transform(q), derivative_transform(c), g, strategy, p
    )

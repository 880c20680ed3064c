"""Series-level preprocessing: derivative transform, z-normalization and the
p-norm combinator used by every independent multivariate measure."""

from __future__ import annotations

import numpy as np

from .core import LabeledDataset, TooShortError, validate_series

NORM_NONE = "none"
NORM_Z_PER_SERIES_PER_DIM = "z-per-series-per-dim"
NORM_POLICIES = (NORM_NONE, NORM_Z_PER_SERIES_PER_DIM)


def derivative_transform(s: np.ndarray) -> np.ndarray:
    """Smoothed first-derivative of each dimension of a series.

    Interior rows (1 <= i <= L-2, 0-based) become
    ``((x[i] - x[i-1]) + (x[i+1] - x[i-1]) / 2) / 2``, applied per dimension.
    The derivative is undefined at the endpoints, so the first and last rows
    replicate the adjacent interior derivative, keeping the output length L.

    Parameters
    ----------
    s : np.ndarray
        Series of shape (L, D) or (L,), with L >= 3.

    Returns
    -------
    np.ndarray
        Transformed series with the same shape as the validated input.
    """
    x = validate_series(s)
    if x.shape[0] < 3:
        raise TooShortError(
            f"derivative transform needs L >= 3, got L={x.shape[0]}"
        )
    interior = ((x[1:-1] - x[:-2]) + (x[2:] - x[:-2]) / 2.0) / 2.0
    out = np.empty_like(x)
    out[1:-1] = interior
    out[0] = interior[0]
    out[-1] = interior[-1]
    return out


def derivative_transform_dataset(ds: LabeledDataset) -> LabeledDataset:
    """Apply ``derivative_transform`` to every series in a dataset."""
    if ds.length < 3:
        raise TooShortError(
            f"derivative transform needs L >= 3, got L={ds.length}"
        )
    X = ds.X
    interior = ((X[:, 1:-1] - X[:, :-2]) + (X[:, 2:] - X[:, :-2]) / 2.0) / 2.0
    out = np.empty_like(X)
    out[:, 1:-1] = interior
    out[:, 0] = interior[:, 0]
    out[:, -1] = interior[:, -1]
    return LabeledDataset.from_arrays(out, ds.y, ds.label_names)


def z_normalize(s: np.ndarray) -> np.ndarray:
    """Shift/scale each dimension of a series to mean 0 and std-dev 1.

    A constant dimension (population std-dev 0) maps to all zeros.
    """
    x = validate_series(s)
    mu = x.mean(axis=0)
    sd = x.std(axis=0)
    out = x - mu
    nonzero = sd > 0.0
    out[:, nonzero] /= sd[nonzero]
    out[:, ~nonzero] = 0.0
    return out


def z_normalize_dataset(ds: LabeledDataset) -> LabeledDataset:
    """Z-normalize every series of a dataset on a per-series, per-dimension basis."""
    mu = ds.X.mean(axis=1, keepdims=True)
    sd = ds.X.std(axis=1, keepdims=True)
    safe = np.where(sd > 0.0, sd, 1.0)
    out = np.where(sd > 0.0, (ds.X - mu) / safe, 0.0)
    return LabeledDataset.from_arrays(out, ds.y, ds.label_names)


def combine_independent(per_dim_values, p: float = 1.0) -> float:
    """Combine per-dimension measure values with a p-norm.

    Returns ``(sum_d |v_d|**p) ** (1/p)``. With the default p=1 this is the
    plain sum of absolute values, which is how independent multivariate
    measures aggregate their per-dimension results.

    Raises
    ------
    ValueError
        If p < 1 or the values are not finite.
    """
    if p < 1.0:
        raise ValueError(f"norm order p must be >= 1, got {p}")
    v = np.asarray(per_dim_values, dtype=np.float64)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("expected a non-empty 1-D sequence of values")
    if not np.isfinite(v).all():
        raise ValueError("per-dimension values must be finite")
    return float(np.sum(np.abs(v) ** p) ** (1.0 / p))

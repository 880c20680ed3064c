"""Core data types: validated series, labeled datasets and dataset statistics.

A multivariate series is represented as a plain ``(L, D)`` float64 array
(row = time index, column = dimension). A labeled dataset of equal-length,
equal-dimension series is a single ``(n, L, D)`` array plus an integer label
vector. All containers are treated as immutable after construction; the
underlying numpy buffers are marked read-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

INDEPENDENT = "independent"
DEPENDENT = "dependent"
STRATEGIES = (INDEPENDENT, DEPENDENT)


class EmptySeriesError(ValueError):
    """Raised when a series or dataset contains no data."""


class NonFiniteValueError(ValueError):
    """Raised when a series contains NaN or infinite values."""


class RaggedDimensionsError(ValueError):
    """Raised when rows of a series grid disagree on dimension count."""


class ShapeMismatchError(ValueError):
    """Raised when two series (or datasets) have incompatible shapes."""


class TooShortError(ValueError):
    """Raised when a series is too short for the requested operation."""


def check_strategy(strategy: str) -> str:
    """Normalize and validate a strategy name ('independent' or 'dependent')."""
    s = str(strategy).lower()
    if s in ("i", "ind", INDEPENDENT):
        return INDEPENDENT
    if s in ("d", "dep", DEPENDENT):
        return DEPENDENT
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def validate_series(raw) -> np.ndarray:
    """Validate a raw grid of observations and return it as an (L, D) array.

    Parameters
    ----------
    raw : array-like
        An L x D grid of finite reals. A 1-D sequence is treated as a
        univariate series of shape (L, 1).

    Returns
    -------
    np.ndarray
        A read-only float64 array of shape (L, D) with L >= 1, D >= 1.

    Raises
    ------
    EmptySeriesError
        If the grid has no rows or no columns.
    RaggedDimensionsError
        If the rows disagree on the number of dimensions.
    NonFiniteValueError
        If any value is NaN or infinite.
    """
    if isinstance(raw, np.ndarray) and raw.dtype == object:
        raise RaggedDimensionsError("rows have differing dimension counts")
    try:
        arr = np.asarray(raw, dtype=np.float64)
    except (ValueError, TypeError) as exc:
        # numpy refuses ragged nested sequences
        raise RaggedDimensionsError(str(exc)) from exc
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D grid, got {arr.ndim}-D input")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise EmptySeriesError("series must contain at least one value")
    if not np.isfinite(arr).all():
        raise NonFiniteValueError("series contains NaN or infinite values")
    arr = np.ascontiguousarray(arr)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class LabeledDataset:
    """Equal-shape collection of multivariate series with class labels.

    Attributes
    ----------
    X : np.ndarray
        Series values, shape (n, L, D), float64, read-only.
    y : np.ndarray
        Dense integer class ids in [0, class_count), shape (n,).
    label_names : tuple of str
        Original label of each class id (sorted lexicographically at load).
    """

    X: np.ndarray
    y: np.ndarray
    label_names: tuple = field(default=())

    @classmethod
    def from_arrays(cls, X, y, label_names=None) -> "LabeledDataset":
        X = np.ascontiguousarray(np.asarray(X, dtype=np.float64))
        if X.ndim != 3:
            raise ShapeMismatchError(f"expected (n, L, D) array, got shape {X.shape}")
        if X.shape[0] == 0 or X.shape[1] == 0 or X.shape[2] == 0:
            raise EmptySeriesError("dataset must contain at least one series")
        if not np.isfinite(X).all():
            raise NonFiniteValueError("dataset contains NaN or infinite values")
        y = np.asarray(y)
        if y.shape[0] != X.shape[0]:
            raise ShapeMismatchError(
                f"{X.shape[0]} series but {y.shape[0]} labels"
            )
        if label_names is None:
            names = sorted({str(v) for v in y.tolist()})
            lookup = {name: k for k, name in enumerate(names)}
            ids = np.array([lookup[str(v)] for v in y.tolist()], dtype=np.int64)
        else:
            names = [str(v) for v in label_names]
            ids = np.asarray(y, dtype=np.int64)
            if ids.size and (ids.min() < 0 or ids.max() >= len(names)):
                raise ValueError("label id out of range for label_names")
        X = X.copy()
        X.flags.writeable = False
        ids = ids.copy()
        ids.flags.writeable = False
        return cls(X=X, y=ids, label_names=tuple(names))

    @classmethod
    def from_labeled_series(cls, series, labels) -> "LabeledDataset":
        """Build a dataset from per-series grids, validating equal shapes."""
        if len(series) == 0:
            raise EmptySeriesError("dataset must contain at least one series")
        if len(series) != len(labels):
            raise ShapeMismatchError(
                f"{len(series)} series but {len(labels)} labels"
            )
        grids = [validate_series(s) for s in series]
        shape = grids[0].shape
        for k, g in enumerate(grids):
            if g.shape != shape:
                raise ShapeMismatchError(
                    f"series 0 has shape {shape} but series {k} has shape {g.shape}"
                )
        return cls.from_arrays(np.stack(grids), np.asarray(labels, dtype=object))

    @property
    def n_instances(self) -> int:
        return self.X.shape[0]

    @property
    def length(self) -> int:
        return self.X.shape[1]

    @property
    def n_dims(self) -> int:
        return self.X.shape[2]

    @property
    def class_count(self) -> int:
        return len(self.label_names)

    def series(self, k: int) -> np.ndarray:
        return self.X[k]


@dataclass(frozen=True)
class DatasetStats:
    """Pooled and per-dimension population standard deviations of a dataset.

    ``sigma_global`` pools every scalar in the training set; ``sigma_per_dim``
    pools the n*L scalars of each dimension separately. Both use the
    population formula (divide by N) so that parameter grids derived from
    them are reproducible regardless of sample-size conventions.
    """

    sigma_global: float
    sigma_per_dim: np.ndarray

    def __post_init__(self):
        sd = np.asarray(self.sigma_per_dim, dtype=np.float64)
        if sd.ndim != 1:
            raise ValueError("sigma_per_dim must be a 1-D vector")
        if self.sigma_global < 0 or (sd < 0).any():
            raise ValueError("standard deviations must be non-negative")
        sd = sd.copy()
        sd.flags.writeable = False
        object.__setattr__(self, "sigma_per_dim", sd)


def compute_stats(train: LabeledDataset) -> DatasetStats:
    """Compute pooled and per-dimension population std-devs of a training set."""
    if train.n_instances == 0:
        raise EmptySeriesError("cannot compute statistics of an empty dataset")
    sigma_global = float(np.std(train.X))
    sigma_per_dim = np.std(train.X.reshape(-1, train.n_dims), axis=0)
    return DatasetStats(sigma_global=sigma_global, sigma_per_dim=sigma_per_dim)

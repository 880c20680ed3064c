"""1-NN prediction, leave-one-out cross-validation and parameter tuning."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import LabeledDataset, ShapeMismatchError
from .grids import MeasureConfig, grid_for
from .measures import cross_distances, pairwise_distances


class TooFewInstancesError(ValueError):
    """Raised when leave-one-out cross-validation needs at least 2 instances."""


@dataclass
class TunedModel:
    """A measure configuration selected by LOOCV, with its training accuracy."""

    config: MeasureConfig
    train_accuracy: float

    def summary(self) -> str:
        params = self.config.params_string()
        return (
            f"measure={self.config.measure} strategy={self.config.strategy}"
            f" params={params if params else '-'}"
            f" train_acc={self.train_accuracy:.6f}"
        )


def nn_predict(train: LabeledDataset, query, config: MeasureConfig,
               n_jobs: int = 1) -> int:
    """Label of the training series nearest to the query.

    Exact distance ties resolve to the lowest training index, so predictions
    are reproducible under any instance-parallel evaluation order.
    """
    query = np.asarray(query, dtype=np.float64)
    if query.ndim == 1:
        query = query.reshape(-1, 1)
    if query.shape != train.X.shape[1:]:
        raise ShapeMismatchError(
            f"query shape {query.shape} does not match training series "
            f"shape {train.X.shape[1:]}"
        )
    dists = cross_distances(query[None, :, :], train.X, config, n_jobs)[0]
    return int(train.y[int(np.argmin(dists))])


def _loocv_correct_flags(dist_matrix: np.ndarray, y: np.ndarray) -> np.ndarray:
    d = dist_matrix.copy()
    np.fill_diagonal(d, np.inf)
    nearest = np.argmin(d, axis=1)  # argmin takes the lowest index on ties
    return y[nearest] == y


def loocv_accuracy(train: LabeledDataset, config: MeasureConfig,
                   n_jobs: int = 1) -> float:
    """Fraction of training series whose nearest other series shares their label."""
    n = train.n_instances
    if n < 2:
        raise TooFewInstancesError(
            f"leave-one-out cross-validation needs n >= 2, got n={n}"
        )
    d = pairwise_distances(train.X, config, n_jobs)
    return float(np.mean(_loocv_correct_flags(d, train.y)))


def tune_measure(train: LabeledDataset, measure: str, strategy: str,
                 stats, n_jobs: int = 1) -> TunedModel:
    """Pick the grid configuration with the highest LOOCV accuracy.

    Accuracy ties resolve to the earliest configuration in grid order
    (smaller window / smaller parameter first), so tuning is deterministic.
    """
    n = train.n_instances
    if n < 2:
        raise TooFewInstancesError(
            f"leave-one-out cross-validation needs n >= 2, got n={n}"
        )
    grid = grid_for(measure, strategy, stats, train.length, train.n_dims)
    best_config = None
    best_correct = -1
    for config in grid:
        d = pairwise_distances(train.X, config, n_jobs)
        flags = _loocv_correct_flags(d, train.y)
        # a later config must strictly beat the incumbent, so stop counting
        # once even a perfect tail cannot exceed it (result-identical)
        correct = 0
        abandoned = False
        for k in range(n):
            if correct + (n - k) <= best_correct:
                abandoned = True
                break
            if flags[k]:
                correct += 1
        if not abandoned and correct > best_correct:
            best_correct = correct
            best_config = config
    return TunedModel(config=best_config, train_accuracy=best_correct / n)


def holdout_accuracy(model: TunedModel, train: LabeledDataset,
                  test: LabeledDataset, n_jobs: int = 1) -> float:
    """Accuracy of 1-NN with the tuned configuration on a held-out set."""
    if test.X.shape[1:] != train.X.shape[1:]:
        raise ShapeMismatchError(
            f"test series shape {test.X.shape[1:]} does not match training "
            f"series shape {train.X.shape[1:]}"
        )
    d = cross_distances(test.X, train.X, model.config, n_jobs)
    predicted = train.y[np.argmin(d, axis=1)]
    return float(np.mean(predicted == test.y))

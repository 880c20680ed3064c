"""Weighted-vote ensembles of tuned 1-NN classifiers (one per measure).

Four variants: 'i' and 'd' tune all eleven measures under one strategy,
'id' keeps both (22 members), and 'a' keeps, per measure, whichever strategy
scored the higher LOOCV accuracy (ties broken by the seeded generator).
Members vote their 1-NN label weighted by their training accuracy; exact
vote-sum ties are broken uniformly at random from the same generator, which
is consumed only in the serial aggregation step so predictions are
reproducible for a given (data, seed) at any thread count.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import DEPENDENT, INDEPENDENT, LabeledDataset, ShapeMismatchError
from .grids import MEASURES
from .knn import TooFewInstancesError, TunedModel, tune_measure
from .measures import cross_distances

MEE_VARIANTS = ("i", "d", "id", "a")


@dataclass
class MeeModel:
    """Tuned ensemble members, their vote weights and the tie-break generator."""

    variant: str
    members: list
    train: LabeledDataset
    rng_seed: int
    rng: np.random.Generator = field(repr=False, default=None)

    @property
    def weights(self) -> np.ndarray:
        return np.array([m.train_accuracy for m in self.members])

    def summary(self) -> str:
        lines = [f"variant={self.variant} members={len(self.members)} seed={self.rng_seed}"]
        lines += [m.summary() for m in self.members]
        return "\n".join(lines) + "\n"


def build_mee(train: LabeledDataset, variant: str, stats, seed: int = 0,
              n_jobs: int = 1) -> MeeModel:
    """Tune every ensemble member for one MEE variant.

    Parameters
    ----------
    train : LabeledDataset
        Training split; every member is tuned on it by LOOCV.
    variant : str
        'i', 'd', 'id' or 'a'.
    stats : DatasetStats
        Training-split statistics used to build parameter grids.
    seed : int
        Seeds the generator used for strategy ties (variant 'a') and later
        for prediction vote ties.
    """
    variant = str(variant).lower()
    if variant not in MEE_VARIANTS:
        raise ValueError(f"unknown MEE variant {variant!r}; expected one of {MEE_VARIANTS}")
    if train.n_instances < 2:
        raise TooFewInstancesError("building an ensemble needs n >= 2")

    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    members: list[TunedModel] = []
    if variant in ("i", "d"):
        strategy = INDEPENDENT if variant == "i" else DEPENDENT
        for measure in MEASURES:
            members.append(tune_measure(train, measure, strategy, stats, n_jobs))
    elif variant == "id":
        for strategy in (INDEPENDENT, DEPENDENT):
            for measure in MEASURES:
                members.append(tune_measure(train, measure, strategy, stats, n_jobs))
    else:  # 'a': the better strategy per measure, random on exact ties
        for measure in MEASURES:
            ind = tune_measure(train, measure, INDEPENDENT, stats, n_jobs)
            dep = tune_measure(train, measure, DEPENDENT, stats, n_jobs)
            if ind.train_accuracy > dep.train_accuracy:
                members.append(ind)
            elif dep.train_accuracy > ind.train_accuracy:
                members.append(dep)
            else:
                members.append(ind if rng.integers(2) == 0 else dep)
    return MeeModel(variant=variant, members=members, train=train,
                    rng_seed=int(seed), rng=rng)


def _vote(model: MeeModel, member_labels, class_count: int) -> int:
    votes = np.zeros(class_count)
    for member, label in zip(model.members, member_labels):
        votes[label] += member.train_accuracy
    best = votes.max()
    tied = np.flatnonzero(votes == best)
    if len(tied) == 1:
        return int(tied[0])
    return int(model.rng.choice(tied))


def mee_predict(model: MeeModel, query, n_jobs: int = 1) -> int:
    """Predict one query label by accuracy-weighted member votes."""
    query = np.asarray(query, dtype=np.float64)
    if query.ndim == 1:
        query = query.reshape(-1, 1)
    if query.shape != model.train.X.shape[1:]:
        raise ShapeMismatchError(
            f"query shape {query.shape} does not match training series "
            f"shape {model.train.X.shape[1:]}"
        )
    labels = []
    for member in model.members:
        d = cross_distances(query[None, :, :], model.train.X, member.config, n_jobs)[0]
        labels.append(int(model.train.y[int(np.argmin(d))]))
    return _vote(model, labels, model.train.class_count)


def mee_predict_batch(model: MeeModel, X, n_jobs: int = 1) -> np.ndarray:
    """Predict a whole collection.

    Member distance matrices are computed up front (parallelizable); the
    vote aggregation then runs serially in instance order so the tie-break
    generator is consumed deterministically.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.shape[1:] != model.train.X.shape[1:]:
        raise ShapeMismatchError(
            f"query series shape {X.shape[1:]} does not match training "
            f"series shape {model.train.X.shape[1:]}"
        )
    member_labels = np.empty((len(model.members), X.shape[0]), dtype=np.int64)
    for k, member in enumerate(model.members):
        d = cross_distances(X, model.train.X, member.config, n_jobs)
        member_labels[k] = model.train.y[np.argmin(d, axis=1)]
    return np.array([
        _vote(model, member_labels[:, i], model.train.class_count)
        for i in range(X.shape[0])
    ], dtype=np.int64)


def mee_test_accuracy(model: MeeModel, test: LabeledDataset,
                      n_jobs: int = 1) -> float:
    predicted = mee_predict_batch(model, test.X, n_jobs)
    return float(np.mean(predicted == test.y))

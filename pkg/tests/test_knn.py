import numpy as np
import pytest

from mvelastic import (
    LabeledDataset,
    MeasureConfig,
    ShapeMismatchError,
    TooFewInstancesError,
    compute_stats,
    grid_for,
    loocv_accuracy,
    nn_predict,
    holdout_accuracy,
    tune_measure,
)

DTWF_I = MeasureConfig("dtwf", "independent")
L2_I = MeasureConfig("l2", "independent")


def _dataset(series, labels):
    return LabeledDataset.from_labeled_series(series, labels)


class TestNnPredict:
    def test_exact_training_twin_wins(self, rng):
        X = rng.normal(size=(4, 6, 2))
        ds = _dataset(list(X), ["a", "b", "c", "d"])
        for k in range(4):
            assert nn_predict(ds, X[k], DTWF_I) == ds.y[k]

    def test_tie_resolves_to_lowest_index(self):
        # both training series are equidistant from the query
        ds = _dataset([[[1.0], [1.0]], [[-1.0], [-1.0]]], ["b", "a"])
        predicted = nn_predict(ds, np.zeros((2, 1)), L2_I)
        assert predicted == ds.y[0]  # index 0 holds label "b"
        assert ds.label_names[predicted] == "b"

    def test_single_element_training_set(self, rng):
        ds = _dataset([rng.normal(size=(5, 1))], ["only"])
        assert nn_predict(ds, rng.normal(size=(5, 1)), DTWF_I) == 0

    def test_permutation_invariant_with_distinct_distances(self, rng):
        X = rng.normal(size=(5, 6, 1))
        labels = ["a", "b", "c", "d", "e"]
        query = rng.normal(size=(6, 1))
        ds = _dataset(list(X), labels)
        base = ds.label_names[nn_predict(ds, query, DTWF_I)]
        perm = rng.permutation(5)
        ds2 = _dataset(list(X[perm]), [labels[i] for i in perm])
        assert ds2.label_names[nn_predict(ds2, query, DTWF_I)] == base

    def test_query_shape_checked(self, rng):
        ds = _dataset([rng.normal(size=(5, 2))], ["a"])
        with pytest.raises(ShapeMismatchError):
            nn_predict(ds, rng.normal(size=(4, 2)), DTWF_I)


class TestLoocvAccuracy:
    def test_two_same_label(self, rng):
        ds = _dataset([rng.normal(size=(4, 1)) for _ in range(2)], ["a", "a"])
        assert loocv_accuracy(ds, DTWF_I) == 1.0

    def test_two_different_labels(self, rng):
        ds = _dataset([rng.normal(size=(4, 1)) for _ in range(2)], ["a", "b"])
        assert loocv_accuracy(ds, DTWF_I) == 0.0

    def test_duplicated_dataset_is_perfect(self, rng):
        X = [rng.normal(size=(5, 2)) for _ in range(3)]
        ds = _dataset(X + X, ["a", "b", "c", "a", "b", "c"])
        assert loocv_accuracy(ds, DTWF_I) == 1.0

    def test_single_instance_rejected(self, rng):
        ds = _dataset([rng.normal(size=(4, 1))], ["a"])
        with pytest.raises(TooFewInstancesError):
            loocv_accuracy(ds, DTWF_I)

    def test_thread_count_invariant(self, rng):
        ds = _dataset([rng.normal(size=(6, 2)) for _ in range(8)], list("aabbccdd"))
        assert loocv_accuracy(ds, DTWF_I, n_jobs=1) == loocv_accuracy(ds, DTWF_I, n_jobs=3)


def _window_separable_dataset():
    """Band 0 classifies perfectly; the full window confuses the classes.

    Class 'a' series are spikes at a fixed position; class 'b' series are the
    same spike shifted. Under band 0 the spike offset dominates. With a full
    window DTW aligns the spikes away, making classes collide; tiny per-class
    jitter then misleads the neighbor choice.
    """
    base = np.zeros(12)
    series, labels = [], []
    for k, amp in enumerate([10.0, 10.2, 10.4]):
        s = base.copy()
        s[2] = amp
        s[3] = 1.0 + 0.2 * k
        series.append(s)
        labels.append("a")
    for k, amp in enumerate([10.1, 10.3, 10.5]):
        s = base.copy()
        s[8] = amp
        s[9] = 1.0 + 0.2 * k
        series.append(s)
        labels.append("b")
    return _dataset(series, labels)


class TestTuneMeasure:
    def test_parameter_free_grid(self, rng):
        ds = _dataset([rng.normal(size=(5, 1)) for _ in range(4)], list("abab"))
        stats = compute_stats(ds)
        model = tune_measure(ds, "dtwf", "independent", stats)
        assert model.config.measure == "dtwf"
        assert model.train_accuracy == loocv_accuracy(ds, model.config)

    def test_argmax_matches_exhaustive_grid_scan(self):
        ds = _window_separable_dataset()
        stats = compute_stats(ds)
        model = tune_measure(ds, "dtw", "independent", stats)
        grid = grid_for("dtw", "independent", stats, ds.length, ds.n_dims)
        accs = [loocv_accuracy(ds, cfg) for cfg in grid]
        assert model.train_accuracy == max(accs)
        assert model.train_accuracy == 1.0
        # the winning band keeps the two spike positions apart
        assert loocv_accuracy(ds, model.config) == 1.0
        assert accs[-1] < 1.0  # widest window confuses the classes

    def test_all_tie_returns_first_config(self, rng):
        X = [rng.normal(size=(8, 1)) for _ in range(2)]
        ds = _dataset(X + X, ["a", "b", "a", "b"])  # every config scores 1.0
        stats = compute_stats(ds)
        model = tune_measure(ds, "dtw", "independent", stats)
        assert model.config.window == 0

    def test_repeat_tuning_is_byte_identical(self):
        ds = _window_separable_dataset()
        stats = compute_stats(ds)
        a = tune_measure(ds, "dtw", "independent", stats)
        b = tune_measure(ds, "dtw", "independent", stats, n_jobs=2)
        assert a.summary() == b.summary()
        assert a.train_accuracy == b.train_accuracy

    def test_early_abandon_is_result_identical(self):
        ds = _window_separable_dataset()
        stats = compute_stats(ds)
        model = tune_measure(ds, "dtw", "independent", stats)
        grid = grid_for("dtw", "independent", stats, ds.length, ds.n_dims)
        best = -1.0
        expected = None
        for cfg in grid:
            acc = loocv_accuracy(ds, cfg)
            if acc > best:
                best = acc
                expected = cfg
        assert model.config.params_string() == expected.params_string()
        assert model.train_accuracy == best


class TestTestAccuracy:
    def test_separable_classes(self, rng):
        train = _dataset(
            [np.zeros((6, 1)) + 0.01 * rng.normal(size=(6, 1)) for _ in range(3)]
            + [np.full((6, 1), 5.0) + 0.01 * rng.normal(size=(6, 1)) for _ in range(3)],
            ["lo"] * 3 + ["hi"] * 3,
        )
        test = _dataset(
            [np.zeros((6, 1)), np.full((6, 1), 5.0)], ["lo", "hi"]
        )
        stats = compute_stats(train)
        model = tune_measure(train, "l2", "independent", stats)
        assert holdout_accuracy(model, train, test) == 1.0

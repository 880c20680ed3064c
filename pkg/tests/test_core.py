import numpy as np
import pytest

from mvelastic import (
    DatasetStats,
    EmptySeriesError,
    LabeledDataset,
    NonFiniteValueError,
    RaggedDimensionsError,
    ShapeMismatchError,
    compute_stats,
    validate_series,
)


class TestValidateSeries:
    def test_accepts_finite_grid(self):
        s = validate_series([[1.0, 2.0], [3.0, 4.0], [5.0, 6.0]])
        assert s.shape == (3, 2)
        assert s.dtype == np.float64

    def test_univariate_list_becomes_column(self):
        assert validate_series([1.0, 2.0]).shape == (2, 1)

    def test_rejects_nan(self):
        with pytest.raises(NonFiniteValueError):
            validate_series([[1.0], [np.nan]])

    def test_rejects_inf(self):
        with pytest.raises(NonFiniteValueError):
            validate_series([[np.inf], [0.0]])

    def test_rejects_empty(self):
        with pytest.raises(EmptySeriesError):
            validate_series(np.empty((0, 2)))

    def test_rejects_ragged_rows(self):
        with pytest.raises(RaggedDimensionsError):
            validate_series([[1.0, 2.0], [3.0]])

    def test_result_is_read_only(self):
        s = validate_series([[1.0], [2.0]])
        with pytest.raises(ValueError):
            s[0, 0] = 9.0


class TestLabeledDataset:
    def test_labels_map_to_sorted_dense_ids(self):
        ds = LabeledDataset.from_labeled_series(
            [[[0.0]], [[1.0]], [[2.0]]], ["b", "a", "b"]
        )
        assert ds.label_names == ("a", "b")
        assert ds.y.tolist() == [1, 0, 1]
        assert ds.class_count == 2

    def test_mismatched_lengths_rejected(self):
        with pytest.raises(ShapeMismatchError):
            LabeledDataset.from_labeled_series([[[0.0]]], ["a", "b"])

    def test_unequal_series_shapes_rejected(self):
        with pytest.raises(ShapeMismatchError):
            LabeledDataset.from_labeled_series(
                [[[0.0], [1.0]], [[0.0]]], ["a", "b"]
            )


class TestComputeStats:
    def test_constant_dataset_has_zero_sigma(self):
        ds = LabeledDataset.from_labeled_series([[[0.0], [0.0], [0.0]]], ["a"])
        stats = compute_stats(ds)
        assert stats.sigma_global == 0.0
        assert stats.sigma_per_dim.tolist() == [0.0]

    def test_population_formula(self):
        # values {0, 2}: mean 1, population variance 1
        ds = LabeledDataset.from_labeled_series([[[0.0], [2.0]]], ["a"])
        assert compute_stats(ds).sigma_global == pytest.approx(1.0)

    def test_per_dimension_sigmas(self):
        series = [[(5.0, 0.0), (5.0, 2.0), (5.0, 0.0), (5.0, 2.0)]]
        ds = LabeledDataset.from_labeled_series(series, ["a"])
        stats = compute_stats(ds)
        assert stats.sigma_per_dim == pytest.approx([0.0, 1.0])

    def test_permutation_invariant(self, rng):
        X = rng.normal(size=(6, 5, 2))
        y = ["a", "b", "a", "b", "a", "b"]
        ds = LabeledDataset.from_labeled_series(list(X), y)
        perm = rng.permutation(6)
        ds2 = LabeledDataset.from_labeled_series(list(X[perm]), [y[i] for i in perm])
        s1, s2 = compute_stats(ds), compute_stats(ds2)
        assert s1.sigma_global == pytest.approx(s2.sigma_global, abs=1e-12)
        assert s1.sigma_per_dim == pytest.approx(s2.sigma_per_dim, abs=1e-12)

    def test_zero_sigma_iff_constant(self, rng):
        X = rng.normal(size=(3, 4, 2))
        ds = LabeledDataset.from_labeled_series(list(X), ["a", "b", "a"])
        assert compute_stats(ds).sigma_global > 0.0

    def test_negative_sigma_rejected(self):
        with pytest.raises(ValueError):
            DatasetStats(sigma_global=-1.0, sigma_per_dim=np.array([0.0]))

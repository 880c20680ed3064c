import numpy as np
import pytest

import oracles
from mvelastic import (
    GapDimensionError,
    ShapeMismatchError,
    erp_multivariate,
    lcss_multivariate,
    msm_cost_multivariate,
    msm_cost_univariate,
    msm_multivariate,
    twe_multivariate,
)

STRATEGIES = ("independent", "dependent")


class TestLcss:
    def test_identity_is_zero(self, rng):
        Q = rng.normal(size=(6, 2))
        assert lcss_multivariate(Q, Q, epsilon=[0.0, 0.0], strategy="independent") == 0.0
        assert lcss_multivariate(Q, Q, epsilon=0.0, strategy="dependent") == 0.0

    def test_half_match_example(self):
        # q=[0,10], c=[0,20], eps=1: only the zeros match -> 1 - 1/2
        assert lcss_multivariate([0.0, 10.0], [0.0, 20.0], epsilon=1.0) == 0.5

    def test_disjoint_ranges_give_one(self):
        assert lcss_multivariate([0.0, 1.0], [50.0, 60.0], epsilon=0.1) == 1.0

    def test_count_monotone_in_epsilon(self, rng):
        x, y = rng.normal(size=10), rng.normal(size=10)
        values = [lcss_multivariate(x, y, epsilon=e) for e in (0.0, 0.2, 0.5, 1.0, 3.0)]
        for a, b in zip(values, values[1:]):
            assert b <= a + 1e-12  # distance falls as the threshold loosens

    def test_range_zero_one_per_dimension(self, rng):
        for _ in range(20):
            L = int(rng.integers(1, 12))
            x, y = rng.normal(size=(L, 1)), rng.normal(size=(L, 1))
            v = lcss_multivariate(x, y, epsilon=float(rng.uniform(0, 2)))
            assert 0.0 <= v <= 1.0

    def test_window_restricts_matches(self):
        # identical series shifted by 2: band 0 pairs unequal values only
        x = np.arange(6.0)
        y = x + 100.0
        y[:4] = x[2:]
        assert lcss_multivariate(x, y, epsilon=0.1, window=0) == 1.0
        assert lcss_multivariate(x, y, epsilon=0.1, window=2) == pytest.approx(1.0 - 4.0 / 6.0)

    def test_symmetry(self, rng):
        Q, C = rng.normal(size=(7, 2)), rng.normal(size=(7, 2))
        eps = [0.4, 0.4]
        assert lcss_multivariate(Q, C, eps) == lcss_multivariate(C, Q, eps)
        assert (lcss_multivariate(Q, C, 0.4, strategy="dependent")
                == lcss_multivariate(C, Q, 0.4, strategy="dependent"))

    def test_matches_subsequence_enumeration(self, rng):
        for _ in range(25):
            L = int(rng.integers(1, 6))
            x, y = rng.normal(size=L), rng.normal(size=L)
            eps = float(rng.uniform(0, 1.5))
            band = [None, 0, 1][int(rng.integers(3))]
            got = lcss_multivariate(x, y, epsilon=eps, window=band)
            count = oracles.lcss_brute_count_uni(x, y, eps, band)
            assert got == pytest.approx(1.0 - count / L, abs=1e-12)

    def test_dependent_match_uses_squared_distance(self):
        # point distance 0.5: squared 0.25 <= eps=0.3 matches even though 0.5 > eps
        assert lcss_multivariate([0.0], [0.5], epsilon=0.3, strategy="dependent") == 0.0
        assert lcss_multivariate([0.0], [0.5], epsilon=0.3, strategy="independent") == 1.0


class TestErp:
    def test_identity_any_gap(self, rng):
        Q = rng.normal(size=(5, 2))
        for strategy in STRATEGIES:
            assert erp_multivariate(Q, Q, g=0.7, strategy=strategy) == 0.0

    def test_hand_unrolled_two_by_two(self):
        assert erp_multivariate([0.0, 0.0], [1.0, 1.0], g=0.0) == 2.0

    def test_single_dimension_collapse(self, rng):
        for _ in range(10):
            L = int(rng.integers(1, 12))
            Q, C = rng.normal(size=(L, 1)), rng.normal(size=(L, 1))
            g = float(rng.normal())
            ind = erp_multivariate(Q, C, g=g, strategy="independent")
            dep = erp_multivariate(Q, C, g=g, strategy="dependent")
            assert ind == pytest.approx(dep, abs=1e-9)

    def test_symmetry_same_gap(self, rng):
        Q, C = rng.normal(size=(6, 3)), rng.normal(size=(6, 3))
        g = rng.normal(size=3)
        for strategy in STRATEGIES:
            assert (erp_multivariate(Q, C, g, strategy=strategy)
                    == erp_multivariate(C, Q, g, strategy=strategy))

    def test_gap_vector_length_checked(self, rng):
        Q, C = rng.normal(size=(4, 3)), rng.normal(size=(4, 3))
        with pytest.raises(GapDimensionError):
            erp_multivariate(Q, C, g=np.zeros(2), strategy="dependent")

    def test_matches_path_enumeration(self, rng):
        for _ in range(25):
            L = int(rng.integers(1, 6))
            x, y = rng.normal(size=L), rng.normal(size=L)
            g = float(rng.normal())
            band = [None, 1][int(rng.integers(2))]
            got = erp_multivariate(x, y, g=g, window=band)
            assert got == pytest.approx(oracles.erp_brute_uni(x, y, g, band), abs=1e-9)


class TestMsmCost:
    def test_between(self):
        assert msm_cost_univariate(2.0, 1.0, 3.0, 0.5) == 0.5

    def test_outside(self):
        assert msm_cost_univariate(3.0, 1.0, 1.0, 0.5) == 2.5

    def test_boundary_equality_counts_as_between(self):
        for c in (0.1, 1.0):
            assert msm_cost_univariate(1.0, 1.0, 1.0, c) == c

    def test_hypersphere_center(self):
        for c in (0.1, 2.0):
            assert msm_cost_multivariate([1.0, 1.0], [0.0, 0.0], [2.0, 2.0], c) == c

    def test_hypersphere_outside_nearest_endpoint(self):
        got = msm_cost_multivariate([5.0, 5.0], [0.0, 0.0], [2.0, 2.0], 0.5)
        assert got == pytest.approx(0.5 + np.sqrt(18.0))

    def test_orthogonally_distant_point_is_not_between(self):
        # projects onto the segment but lies far outside the sphere
        got = msm_cost_multivariate([1.0, 10.0], [0.0, 0.0], [2.0, 0.0], 0.5)
        assert got == pytest.approx(0.5 + np.hypot(1.0, 10.0))

    def test_d1_reproduces_univariate_exactly(self, rng):
        for _ in range(2000):
            new, x, y = rng.normal(size=3)
            c = float(rng.uniform(0.01, 5.0))
            assert (msm_cost_multivariate([new], [x], [y], c)
                    == msm_cost_univariate(new, x, y, c))

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ShapeMismatchError):
            msm_cost_multivariate([1.0, 2.0], [0.0], [1.0], 0.5)


class TestMsm:
    def test_identity(self, rng):
        Q = rng.normal(size=(6, 2))
        for strategy in STRATEGIES:
            assert msm_multivariate(Q, Q, cost=0.3, strategy=strategy) == 0.0

    def test_hand_unrolled_two_by_two(self):
        assert msm_multivariate([1.0, 2.0], [1.0, 3.0], cost=0.5) == 1.0

    def test_symmetry(self, rng):
        Q, C = rng.normal(size=(7, 2)), rng.normal(size=(7, 2))
        for strategy in STRATEGIES:
            assert (msm_multivariate(Q, C, 0.4, strategy)
                    == msm_multivariate(C, Q, 0.4, strategy))

    def test_strategies_co_monotone_under_pair_scaling(self, rng):
        # dependent squares the move cost, so values differ at D=1, but both
        # variants must grow together as a pair is pulled apart
        for _ in range(100):
            L = int(rng.integers(2, 8))
            Q, C = rng.normal(size=(L, 1)), rng.normal(size=(L, 1))
            scales = [0.5, 1.0, 2.0, 4.0]
            ind = [msm_multivariate(a * Q, a * C, 1.0, "independent") for a in scales]
            dep = [msm_multivariate(a * Q, a * C, 1.0, "dependent") for a in scales]
            assert all(b >= a - 1e-12 for a, b in zip(ind, ind[1:]))
            assert all(b >= a - 1e-12 for a, b in zip(dep, dep[1:]))

    def test_zero_distance_agreement(self, rng):
        Q = rng.normal(size=(5, 3))
        assert msm_multivariate(Q, Q, 0.2, "independent") == 0.0
        assert msm_multivariate(Q, Q, 0.2, "dependent") == 0.0

    def test_invalid_cost_rejected(self, rng):
        Q = rng.normal(size=(3, 1))
        with pytest.raises(ValueError):
            msm_multivariate(Q, Q, cost=0.0)

    def test_matches_edit_script_enumeration(self, rng):
        for _ in range(25):
            L = int(rng.integers(1, 6))
            x, y = rng.normal(size=L), rng.normal(size=L)
            c = float(rng.uniform(0.01, 3.0))
            got = msm_multivariate(x, y, cost=c)
            assert got == pytest.approx(oracles.msm_brute_uni(x, y, c), abs=1e-9)

    def test_matches_edit_script_enumeration_multivariate(self, rng):
        for _ in range(8):
            L = int(rng.integers(1, 7))
            D = int(rng.integers(1, 4))
            Q, C = rng.normal(size=(L, D)), rng.normal(size=(L, D))
            c = float(rng.uniform(0.01, 3.0))
            assert msm_multivariate(Q, C, c, "dependent") == pytest.approx(
                oracles.msm_brute_dep(Q, C, c), abs=1e-9)
            assert twe_multivariate(Q, C, 0.01, 0.5, "dependent") == pytest.approx(
                oracles.twe_brute_dep(Q, C, 0.01, 0.5), abs=1e-9)


class TestTwe:
    def test_identity_at_zero_stiffness(self, rng):
        Q = rng.normal(size=(6, 2))
        for strategy in STRATEGIES:
            assert twe_multivariate(Q, Q, nu=0.0, lam=2.0, strategy=strategy) == 0.0

    def test_single_cell_matrix(self):
        # only one path: match (0-1)^2 + (0-0)^2 with zero-point prefix
        assert twe_multivariate([0.0], [1.0], nu=0.0, lam=0.0) == 1.0

    def test_single_dimension_collapse(self, rng):
        for _ in range(10):
            L = int(rng.integers(1, 12))
            Q, C = rng.normal(size=(L, 1)), rng.normal(size=(L, 1))
            ind = twe_multivariate(Q, C, nu=1e-3, lam=0.5, strategy="independent")
            dep = twe_multivariate(Q, C, nu=1e-3, lam=0.5, strategy="dependent")
            assert ind == pytest.approx(dep, abs=1e-9)

    def test_symmetry(self, rng):
        Q, C = rng.normal(size=(8, 2)), rng.normal(size=(8, 2))
        for strategy in STRATEGIES:
            assert (twe_multivariate(Q, C, 1e-2, 0.3, strategy)
                    == twe_multivariate(C, Q, 1e-2, 0.3, strategy))

    def test_negative_params_rejected(self, rng):
        Q = rng.normal(size=(3, 1))
        with pytest.raises(ValueError):
            twe_multivariate(Q, Q, nu=-1.0, lam=0.0)

    def test_matches_path_enumeration(self, rng):
        for _ in range(25):
            L = int(rng.integers(1, 6))
            x, y = rng.normal(size=L), rng.normal(size=L)
            nu = float(rng.uniform(0, 0.5))
            lam = float(rng.uniform(0, 1.0))
            got = twe_multivariate(x, y, nu=nu, lam=lam)
            assert got == pytest.approx(oracles.twe_brute_uni(x, y, nu, lam), abs=1e-9)

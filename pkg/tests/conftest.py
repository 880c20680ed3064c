import numpy as np
import pytest

import mvelastic as mv
from mvelastic.grids import MeasureConfig
from mvelastic.measures import pairwise_distances


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger JIT compilation of every kernel once, on tiny inputs.

    Keeps timing-sensitive acceptance checks measuring algorithm runtime
    rather than compiler warmup (compiled kernels are disk-cached anyway).
    """
    X = np.array([[[0.0, 1.0], [1.0, 0.0], [2.0, 1.0]],
                  [[1.0, 1.0], [0.0, 0.0], [1.0, 2.0]]])
    configs = [
        MeasureConfig("l2", s) for s in ("independent", "dependent")
    ] + [
        MeasureConfig("dtw", s, window=1) for s in ("independent", "dependent")
    ] + [
        MeasureConfig("dtwf", s) for s in ("independent", "dependent")
    ] + [
        MeasureConfig("ddtw", s, window=1) for s in ("independent", "dependent")
    ] + [
        MeasureConfig("wdtw", s, g=0.1) for s in ("independent", "dependent")
    ] + [
        MeasureConfig("wddtw", s, g=0.1) for s in ("independent", "dependent")
    ] + [
        MeasureConfig("lcss", "independent", epsilon=np.array([0.5, 0.5]), window=1),
        MeasureConfig("lcss", "dependent", epsilon=0.5, window=1),
        MeasureConfig("erp", "independent", gap=np.zeros(2), window=1),
        MeasureConfig("erp", "dependent", gap=np.zeros(2), window=1),
        MeasureConfig("msm", "independent", cost=0.5),
        MeasureConfig("msm", "dependent", cost=0.5),
        MeasureConfig("twe", "independent", nu=1e-4, lam=0.5),
        MeasureConfig("twe", "dependent", nu=1e-4, lam=0.5),
    ]
    for cfg in configs:
        pairwise_distances(X, cfg)
    mv.msm_cost_univariate(1.0, 0.0, 2.0, 0.5)
    mv.msm_cost_multivariate([1.0], [0.0], [2.0], 0.5)


def random_series(rng, L, D):
    return rng.normal(size=(L, D))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)

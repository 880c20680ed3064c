"""Measure catalog, configurations and cross-validation parameter grids.

Each tunable measure gets a deterministic grid of exactly 100 configurations
(parameter-free measures get a single one). Grid conventions not fully pinned
by the measures themselves:

* DTW/DDTW windows: integer bands ``floor(r * L / 100)`` for r = 0..99;
* WDTW/WDDTW penalties: g in {0.00, 0.01, ..., 0.99};
* LCSS and ERP: 10 thresholds x 10 windows, windows evenly spaced integers
  in [0, L/4], thresholds evenly spaced in [sigma/5, sigma] (per dimension
  where applicable; dependent LCSS scales the range to [2*D*sigma/5,
  2*D*sigma] against the pooled sigma);
* MSM costs: 100 values covering the four decades from 0.01 to 100, 25
  evenly spaced values per decade;
* TWE: 10 deletion penalties x 10 stiffness values; the dependent grid
  scales both by the dimension count as documented in ``grid_for``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .core import DEPENDENT, DatasetStats, check_strategy

MEASURES = (
    "l2", "dtwf", "dtw", "ddtwf", "ddtw", "wdtw", "wddtw",
    "lcss", "erp", "msm", "twe",
)

ELASTIC_MEASURES = MEASURES[1:]

# measures whose kernels run on the derivative-transformed series
DERIVATIVE_MEASURES = ("ddtwf", "ddtw", "wddtw")

GRID_VERSION = "1"


class DegenerateStatsWarning(UserWarning):
    """Emitted when a zero-variance dataset collapses a parameter range."""


@dataclass
class MeasureConfig:
    """One concrete parameterization of a measure under a strategy.

    Only the fields that the measure consumes are set: ``window`` for
    DTW/DDTW/LCSS/ERP (None = full), ``g`` for WDTW/WDDTW, ``epsilon`` for
    LCSS (scalar or per-dimension vector), ``gap`` for ERP (scalar or
    per-dimension vector), ``cost`` for MSM, ``nu``/``lam`` for TWE. ``p`` is
    the norm order used to combine per-dimension results in the independent
    strategy.
    """

    measure: str
    strategy: str
    p: float = 1.0
    window: int | None = None
    g: float | None = None
    epsilon: object = None
    gap: object = None
    cost: float | None = None
    nu: float | None = None
    lam: float | None = None

    def __post_init__(self):
        if self.measure not in MEASURES:
            raise ValueError(f"unknown measure {self.measure!r}")
        self.strategy = check_strategy(self.strategy)
        needed = _FIELDS_BY_MEASURE[self.measure]
        for name in ("window", "g", "epsilon", "gap", "cost", "nu", "lam"):
            if getattr(self, name) is not None and name not in needed:
                raise ValueError(
                    f"measure {self.measure!r} does not take parameter {name!r}"
                )

    def params_string(self) -> str:
        """Human-readable parameter summary, stable across runs."""
        return _format_params(self)


_FIELDS_BY_MEASURE = {
    "l2": (),
    "dtwf": (),
    "ddtwf": (),
    "dtw": ("window",),
    "ddtw": ("window",),
    "wdtw": ("g",),
    "wddtw": ("g",),
    "lcss": ("epsilon", "window"),
    "erp": ("gap", "window"),
    "msm": ("cost",),
    "twe": ("nu", "lam"),
}


def _fmt(v: float) -> str:
    return format(float(v), "g")


def _fmt_vector(v) -> str:
    arr = np.asarray(v, dtype=np.float64).reshape(-1)
    if arr.size == 1:
        return _fmt(arr[0])
    return "[" + ";".join(_fmt(x) for x in arr) + "]"


def _fmt_window(w) -> str:
    return "full" if w is None else str(int(w))


def _format_params(cfg: "MeasureConfig") -> str:
    m = cfg.measure
    if m in ("l2", "dtwf", "ddtwf"):
        return ""
    if m in ("dtw", "ddtw"):
        return f"w={_fmt_window(cfg.window)}"
    if m in ("wdtw", "wddtw"):
        return f"g={_fmt(cfg.g)}"
    if m == "lcss":
        return f"e={_fmt_vector(cfg.epsilon)},band={_fmt_window(cfg.window)}"
    if m == "erp":
        return f"g={_fmt_vector(cfg.gap)},band={_fmt_window(cfg.window)}"
    if m == "msm":
        return f"c={_fmt(cfg.cost)}"
    if m == "twe":
        return f"nu={_fmt(cfg.nu)},lambda={_fmt(cfg.lam)}"
    raise AssertionError(m)


def _window_bands_percent(L: int) -> list[int]:
    return [(r * L) // 100 for r in range(100)]


def _window_bands_quarter(L: int) -> list[int]:
    # 10 evenly spaced integer bands between 0 and L/4
    return [(k * L) // (4 * 9) for k in range(10)]


def _msm_costs() -> list[float]:
    # four decades, 25 evenly spaced values each; later decades drop their
    # left endpoint so the full sequence has exactly 100 distinct values
    values = list(np.linspace(0.01, 0.1, 25))
    for lo, hi in ((0.1, 1.0), (1.0, 10.0), (10.0, 100.0)):
        values.extend(np.linspace(lo, hi, 26)[1:])
    return [float(v) for v in values]


_TWE_NU = (1e-5, 5e-5, 1e-4, 5e-4, 1e-3, 5e-3, 1e-2, 5e-2, 1e-1, 5e-1)


def _twe_nu_dependent(D: int) -> list[float]:
    # alternating 2D/D prefactors on a decade ladder, ending at 2D
    return [
        2 * D * 1e-5, D * 1e-4, 2 * D * 1e-4, D * 1e-3, 2 * D * 1e-3,
        D * 1e-2, 2 * D * 1e-2, D * 1e-1, 2 * D * 1e-1, 2.0 * D,
    ]


def _threshold_range(sigma: float, warn_ctx: str) -> np.ndarray:
    if sigma <= 0.0:
        warnings.warn(
            f"zero-variance statistics: {warn_ctx} grid collapses to a single value",
            DegenerateStatsWarning,
            stacklevel=3,
        )
        return np.zeros(10)
    return np.linspace(sigma / 5.0, sigma, 10)


def grid_for(measure: str, strategy: str, stats: DatasetStats,
             L: int, D: int) -> list[MeasureConfig]:
    """Build the deterministic cross-validation grid for a measure/strategy.

    Parameters
    ----------
    measure : str
        One of ``MEASURES``.
    strategy : str
        'independent' or 'dependent'.
    stats : DatasetStats
        Standard deviations of the training split (never the test split).
    L, D : int
        Series length and dimension count of the dataset.

    Returns
    -------
    list of MeasureConfig
        Exactly 100 configurations for tunable measures, 1 otherwise, in a
        fixed deterministic order (ties during tuning resolve to the earliest
        entry).
    """
    strategy = check_strategy(strategy)
    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}")

    if measure in ("l2", "dtwf", "ddtwf"):
        return [MeasureConfig(measure, strategy)]

    if measure in ("dtw", "ddtw"):
        return [MeasureConfig(measure, strategy, window=b)
                for b in _window_bands_percent(L)]

    if measure in ("wdtw", "wddtw"):
        return [MeasureConfig(measure, strategy, g=r / 100.0) for r in range(100)]

    if measure == "lcss":
        bands = _window_bands_quarter(L)
        if strategy == DEPENDENT:
            sigma = stats.sigma_global
            if sigma <= 0.0:
                eps_values = _threshold_range(0.0, "lcss epsilon")
            else:
                eps_values = np.linspace(2 * D * sigma / 5.0, 2 * D * sigma, 10)
            return [MeasureConfig(measure, strategy, epsilon=float(e), window=b)
                    for e in eps_values for b in bands]
        per_dim = np.stack([
            _threshold_range(stats.sigma_per_dim[d], f"lcss epsilon dim {d}")
            for d in range(D)
        ], axis=1)  # (10, D): row k is the k-th threshold level across dims
        return [MeasureConfig(measure, strategy, epsilon=per_dim[k].copy(), window=b)
                for k in range(10) for b in bands]

    if measure == "erp":
        bands = _window_bands_quarter(L)
        per_dim = np.stack([
            _threshold_range(stats.sigma_per_dim[d], f"erp gap dim {d}")
            for d in range(D)
        ], axis=1)
        return [MeasureConfig(measure, strategy, gap=per_dim[k].copy(), window=b)
                for k in range(10) for b in bands]

    if measure == "msm":
        return [MeasureConfig(measure, strategy, cost=c) for c in _msm_costs()]

    if measure == "twe":
        if strategy == DEPENDENT:
            lams = [2.0 * D * i / 9.0 for i in range(10)]
            nus = _twe_nu_dependent(D)
        else:
            lams = [i / 9.0 for i in range(10)]
            nus = list(_TWE_NU)
        return [MeasureConfig(measure, strategy, nu=float(nu), lam=float(lam))
                for lam in lams for nu in nus]

    raise AssertionError(measure)


__all__ = [
    "MEASURES", "ELASTIC_MEASURES", "DERIVATIVE_MEASURES", "GRID_VERSION",
    "DegenerateStatsWarning", "MeasureConfig", "grid_for",
]

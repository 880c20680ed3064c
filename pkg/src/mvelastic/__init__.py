"""Multivariate elastic similarity and distance measures for time series.

Eleven measures (Lp, full-window and banded DTW, their derivative forms,
WDTW/WDDTW, LCSS, ERP, MSM, TWE), each in an independent variant (univariate
kernel per dimension, p-norm combination) and a dependent variant (one DP
over whole multi-dimensional points), plus 1-NN tuning by leave-one-out
cross-validation and the accuracy-weighted elastic ensembles built on top.
"""

from .core import (
    DEPENDENT,
    INDEPENDENT,
    DatasetStats,
    EmptySeriesError,
    LabeledDataset,
    NonFiniteValueError,
    RaggedDimensionsError,
    ShapeMismatchError,
    TooShortError,
    compute_stats,
    validate_series,
)
from .dtw_family import (
    ddtw_multivariate,
    dtw_multivariate,
    dtw_univariate,
    lp_multivariate,
    lp_univariate,
    wddtw_multivariate,
    wdtw_multivariate,
    wdtw_weight,
)
from .edit_family import (
    GapDimensionError,
    erp_multivariate,
    lcss_multivariate,
    msm_cost_multivariate,
    msm_cost_univariate,
    msm_multivariate,
    twe_multivariate,
)
from .ensemble import (
    MEE_VARIANTS,
    MeeModel,
    build_mee,
    mee_predict,
    mee_predict_batch,
    mee_test_accuracy,
)
from .grids import (
    DERIVATIVE_MEASURES,
    ELASTIC_MEASURES,
    GRID_VERSION,
    MEASURES,
    DegenerateStatsWarning,
    MeasureConfig,
    grid_for,
)
from .knn import (
    TooFewInstancesError,
    TunedModel,
    holdout_accuracy,
    loocv_accuracy,
    nn_predict,
    tune_measure,
)
from .measures import compute_distance, cross_distances, pairwise_distances
from .transforms import (
    combine_independent,
    derivative_transform,
    derivative_transform_dataset,
    z_normalize,
    z_normalize_dataset,
)
from .tsio import (
    IncompatibleDatasetsError,
    MissingDataSectionError,
    MissingLabelError,
    RaggedSeriesError,
    ResamplePlan,
    ResultRow,
    TsFile,
    TsParseError,
    UnparsableValueError,
    align_labels,
    format_ts_file,
    load_ts_file,
    parse_ts_file,
    resample_split,
    write_results,
)

__version__ = "0.1.0"

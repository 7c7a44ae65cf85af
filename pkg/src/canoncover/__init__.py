"""Group-symmetric canonizations, quotient metrics, coverage estimators,
and exact covering-number bounds for point clouds in the unit cube."""

from .bounds import (
    TABLE_FORMULAS,
    LogValue,
    TableEntry,
    as_exact_ratio,
    bound_group_cardinality,
    bound_hilbert_upper,
    bound_hypercube_exact,
    bound_lexsort_lower,
    bound_quotient_upper,
    bounds_table,
    digit_count,
    generalization_rhs,
    mantissa_exponent,
    multiset_count,
    sci_string,
)
from .canon import (
    CanonResult,
    DegenerateSpectrumError,
    canon_abs,
    canon_c1,
    canon_centralize,
    canon_cinf,
    canon_hilbert,
    canon_lexsort,
    canon_skewness_sign,
    canon_sort,
    jacobi_eigh,
    pca_align,
    sign_orbit,
)
from .coverage import (
    CoverageReport,
    LabelCoverageError,
    NetResult,
    coverage,
    exact_cover_number,
    greedy_net,
    greedy_packing,
    two_ball_set,
)
from .data import (
    CANON_CHOICES,
    Dataset,
    PointCloud,
    apply_canon,
    canonize_dataset,
    normalize_cloud,
    synthetic_dataset,
    synthetic_split,
)
from .hilbert import (
    HilbertParams,
    cell_of,
    centroid,
    cloud_indices,
    decode,
    encode,
    index_centroid,
    snap_to_centroids,
)
from .metrics import (
    METRIC_CHOICES,
    InternalConsistencyError,
    Metric,
    brute_perm_quotient,
    dist_frobenius,
    dist_inf,
    dist_mean_euclidean,
    parse_metric,
    perm_quotient_bottleneck,
    perm_quotient_pnorm,
    perm_quotient_sum,
    sign_quotient,
    translation_quotient,
    wasserstein_1d,
)
from .verify import SUITE_NAMES, CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "CANON_CHOICES",
    "METRIC_CHOICES",
    "SUITE_NAMES",
    "TABLE_FORMULAS",
    "CanonResult",
    "CheckResult",
    "CoverageReport",
    "Dataset",
    "DegenerateSpectrumError",
    "HilbertParams",
    "InternalConsistencyError",
    "LabelCoverageError",
    "LogValue",
    "Metric",
    "NetResult",
    "PointCloud",
    "TableEntry",
    "apply_canon",
    "as_exact_ratio",
    "bound_group_cardinality",
    "bound_hilbert_upper",
    "bound_hypercube_exact",
    "bound_lexsort_lower",
    "bound_quotient_upper",
    "bounds_table",
    "brute_perm_quotient",
    "canon_abs",
    "canon_c1",
    "canon_centralize",
    "canon_cinf",
    "canon_hilbert",
    "canon_lexsort",
    "canon_skewness_sign",
    "canon_sort",
    "canonize_dataset",
    "cell_of",
    "centroid",
    "cloud_indices",
    "coverage",
    "decode",
    "digit_count",
    "dist_frobenius",
    "dist_inf",
    "dist_mean_euclidean",
    "encode",
    "exact_cover_number",
    "generalization_rhs",
    "greedy_net",
    "greedy_packing",
    "index_centroid",
    "jacobi_eigh",
    "mantissa_exponent",
    "multiset_count",
    "normalize_cloud",
    "pca_align",
    "parse_metric",
    "perm_quotient_bottleneck",
    "perm_quotient_pnorm",
    "perm_quotient_sum",
    "run_suite",
    "sci_string",
    "sign_orbit",
    "sign_quotient",
    "snap_to_centroids",
    "synthetic_dataset",
    "synthetic_split",
    "translation_quotient",
    "two_ball_set",
    "wasserstein_1d",
]

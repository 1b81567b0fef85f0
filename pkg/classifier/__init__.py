from .types import LinearClassifier
from .linear import (
    from_threshold,
    predict,
    predict_batch,
    margin,
    sign_plus,
    worst_case_perturbation,
    worst_case_batch,
)
from .evaluate import empirical_classwise_risk, error_counts
from .search import fit_threshold_numeric, golden_section

__all__ = [
    "LinearClassifier",
    "from_threshold",
    "predict",
    "predict_batch",
    "margin",
    "sign_plus",
    "worst_case_perturbation",
    "worst_case_batch",
    "empirical_classwise_risk",
    "error_counts",
    "fit_threshold_numeric",
    "golden_section",
]

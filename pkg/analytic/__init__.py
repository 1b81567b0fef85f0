from .types import (
    PerturbationBudget,
    AnalyticConstants,
    RiskPair,
    NATURAL,
    ADVERSARIAL,
    PLAIN,
    MIXUP,
    REGIMES,
    regime_tag,
)
from .normal import std_normal_cdf, std_normal_pdf
from .objective import overall_risk, classwise_z
from .thresholds import (
    bias_constant_K,
    natural_threshold,
    adversarial_threshold,
    optimal_threshold,
    is_equal_variance,
)
from .risks import (
    classwise_natural_risk,
    classwise_adversarial_risk,
    classwise_risk,
    classwise_risk_at,
    disparity,
    disparity_closed_form,
)
from .bounds import ordering_bounds, ordering_chain, chain_holds

__all__ = [
    "PerturbationBudget",
    "AnalyticConstants",
    "RiskPair",
    "NATURAL",
    "ADVERSARIAL",
    "PLAIN",
    "MIXUP",
    "REGIMES",
    "regime_tag",
    "std_normal_cdf",
    "std_normal_pdf",
    "overall_risk",
    "classwise_z",
    "bias_constant_K",
    "natural_threshold",
    "adversarial_threshold",
    "optimal_threshold",
    "is_equal_variance",
    "classwise_natural_risk",
    "classwise_adversarial_risk",
    "classwise_risk",
    "classwise_risk_at",
    "disparity",
    "disparity_closed_form",
    "ordering_bounds",
    "ordering_chain",
    "chain_holds",
]

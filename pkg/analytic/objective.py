# analytic/objective.py
"""Risk of a uniform-weight threshold classifier sign(sum(x) + t)."""
import math
from typing import Optional, Tuple

import numpy as np

from gaussian.types import MixupSpec, ModelParams

from .normal import ArrayLike, std_normal_cdf
from .types import PerturbationBudget


def effective_means(params: ModelParams, budget: Optional[PerturbationBudget]) -> Tuple[float, float]:
    """Per-coordinate class means after the worst-case l-inf shift toward the boundary."""
    eps = 0.0 if budget is None else budget.epsilon
    return params.mu_plus - eps, params.mu_minus - eps


def classwise_z(
    t: ArrayLike,
    params: ModelParams,
    spec: MixupSpec,
    budget: Optional[PerturbationBudget] = None,
) -> Tuple[ArrayLike, ArrayLike]:
    """Standardised arguments of Phi for R+ and R- at threshold t."""
    mp, mm = effective_means(params, budget)
    d = params.d
    root = math.sqrt(d * spec.fixed_g())
    t = np.asarray(t, dtype=np.float64)
    z_plus = (-t - d * mp) / (root * params.sigma_plus)
    z_minus = (t - d * mm) / (root * params.sigma_minus)
    if z_plus.ndim == 0:
        return float(z_plus), float(z_minus)
    return z_plus, z_minus


def classwise_values(
    t: ArrayLike,
    params: ModelParams,
    spec: MixupSpec,
    budget: Optional[PerturbationBudget] = None,
) -> Tuple[ArrayLike, ArrayLike]:
    z_plus, z_minus = classwise_z(t, params, spec, budget)
    return std_normal_cdf(z_plus), std_normal_cdf(z_minus)


def overall_risk(
    t: ArrayLike,
    params: ModelParams,
    spec: MixupSpec,
    budget: Optional[PerturbationBudget] = None,
) -> ArrayLike:
    """alpha * R+(t) + (1 - alpha) * R-(t), the objective the optimal threshold minimises."""
    r_plus, r_minus = classwise_values(t, params, spec, budget)
    return params.alpha * r_plus + (1.0 - params.alpha) * r_minus

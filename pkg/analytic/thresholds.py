# analytic/thresholds.py
import logging
import math
from dataclasses import dataclass
from typing import Optional

from gaussian.errors import NoRealRootError
from gaussian.types import MixupSpec, ModelParams

from .objective import effective_means, overall_risk
from .types import AnalyticConstants, PerturbationBudget

logger = logging.getLogger(__name__)

# Relative gap below which sigma_plus^2 and sigma_minus^2 are treated as equal.
EQUAL_VARIANCE_RTOL = 1e-9


def bias_constant_K(params: ModelParams) -> float:
    """K = d * log(alpha * sigma_minus / ((1 - alpha) * sigma_plus))."""
    log_ratio = (
        math.log(params.alpha) - math.log1p(-params.alpha)
        + math.log(params.sigma_minus) - math.log(params.sigma_plus)
    )
    return params.d * log_ratio


def is_equal_variance(params: ModelParams) -> bool:
    vp = params.sigma_plus ** 2
    vm = params.sigma_minus ** 2
    return abs(vm - vp) < EQUAL_VARIANCE_RTOL * max(vm, vp)


def pooled_sigma(params: ModelParams) -> float:
    """Common sigma for the equal-variance branch (exact when the sigmas are equal)."""
    if params.sigma_plus == params.sigma_minus:
        return params.sigma_plus
    return math.sqrt(params.sigma_plus * params.sigma_minus)


@dataclass(frozen=True)
class _Solution:
    threshold: float
    other_root: Optional[float]
    numerator_M: Optional[float]


def _equal_variance_threshold(mp: float, mm: float, sigma: float, d: int, g: float, K: float) -> float:
    # (-d^2 (mp^2 - mm^2) + 2 K sigma^2 g) / (2 d (mp + mm))
    return (-(d * d) * (mp * mp - mm * mm) + 2.0 * K * sigma * sigma * g) / (2.0 * d * (mp + mm))


def _solve(
    params: ModelParams,
    spec: MixupSpec,
    budget: Optional[PerturbationBudget],
    K: float,
) -> _Solution:
    """
    Stationary point of the overall risk in t.

    Setting the derivative to zero gives
        (s_-^2 - s_+^2) t^2 - 2 M t + d^2 (mp^2 s_-^2 - mm^2 s_+^2) - 2 K g s_+^2 s_-^2 = 0
    with M = -d (mp s_-^2 + mm s_+^2); its discriminant factors as
        s_+^2 s_-^2 d^2 (mp + mm)^2 * (1 + 2 K g (s_-^2 - s_+^2) / (d^2 (mp + mm)^2)).
    """
    mp, mm = effective_means(params, budget)
    d = params.d
    g = spec.fixed_g()
    if is_equal_variance(params):
        sigma = pooled_sigma(params)
        return _Solution(_equal_variance_threshold(mp, mm, sigma, d, g, K), None, None)

    vp = params.sigma_plus ** 2
    vm = params.sigma_minus ** 2
    gap = vm - vp
    distance = mp + mm
    M = -d * (mp * vm + mm * vp)
    radicand = 1.0 + 2.0 * K * g * gap / ((d * distance) ** 2)
    if radicand < 0:
        raise NoRealRootError(
            f"optimal threshold has no real root: radicand {radicand:.6g} < 0 "
            f"(K={K:.6g}, g={g:.6g}, sigma_minus^2 - sigma_plus^2={gap:.6g})"
        )
    spread = d * params.sigma_plus * params.sigma_minus * distance * math.sqrt(radicand)
    plus_root = (M + spread) / gap
    minus_root = (M - spread) / gap
    r_plus_root = overall_risk(plus_root, params, spec, budget)
    r_minus_root = overall_risk(minus_root, params, spec, budget)
    if r_minus_root < r_plus_root:
        logger.debug("'-' root %.6g beats '+' root %.6g", minus_root, plus_root)
        return _Solution(minus_root, plus_root, M)
    return _Solution(plus_root, minus_root, M)


def natural_threshold(params: ModelParams, spec: MixupSpec) -> AnalyticConstants:
    """
    Risk-minimising threshold t = b / w of the uniform-weight classifier
    trained on the (mixup) natural distribution.

    Equal variances give t_star; unequal variances give eta_star.
    """
    K = bias_constant_K(params)
    sol = _solve(params, spec, None, K)
    if is_equal_variance(params):
        return AnalyticConstants(K=K, t_star=sol.threshold)
    return AnalyticConstants(K=K, eta_star=sol.threshold, other_root=sol.other_root)


def adversarial_threshold(
    params: ModelParams,
    spec: MixupSpec,
    budget: PerturbationBudget,
) -> AnalyticConstants:
    """Risk-minimising threshold s_star under an l-inf adversary of radius epsilon."""
    budget.check(params)
    K = bias_constant_K(params)
    sol = _solve(params, spec, budget, K)
    d = params.d
    shifted = params.class_distance - 2.0 * budget.epsilon
    if is_equal_variance(params):
        return AnalyticConstants(K=K, s_star=sol.threshold, M_prime=(d * d) * shifted * shifted)
    return AnalyticConstants(K=K, s_star=sol.threshold, M=sol.numerator_M, other_root=sol.other_root)


def optimal_threshold(
    params: ModelParams,
    spec: MixupSpec,
    budget: Optional[PerturbationBudget] = None,
) -> float:
    if budget is None:
        return natural_threshold(params, spec).threshold
    return adversarial_threshold(params, spec, budget).threshold

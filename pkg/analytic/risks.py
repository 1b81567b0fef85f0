# analytic/risks.py
import math
from typing import Optional

from gaussian.errors import UnsupportedRegimeError
from gaussian.types import MixupSpec, ModelParams

from .normal import std_normal_cdf
from .objective import classwise_values, effective_means
from .thresholds import (
    adversarial_threshold,
    bias_constant_K,
    is_equal_variance,
    natural_threshold,
    pooled_sigma,
)
from .types import ADVERSARIAL, MIXUP, NATURAL, PLAIN, PerturbationBudget, RiskPair


def _variant(spec: MixupSpec) -> str:
    return PLAIN if spec.fixed_g() == 1.0 else MIXUP


def _equal_variance_z(params: ModelParams, spec: MixupSpec, budget: Optional[PerturbationBudget], K: float):
    """
    Simplified arguments of Phi at the optimal threshold when sigma_+ = sigma_-:
        (-d^2 c^2 -/+ 2 K sigma^2 g) / (2 sigma c sqrt(d^3 g)),  c = mp + mm.
    """
    mp, mm = effective_means(params, budget)
    c = mp + mm
    d = params.d
    g = spec.fixed_g()
    sigma = pooled_sigma(params)
    base = (d * d) * c * c
    tilt = 2.0 * K * sigma * sigma * g
    denom = 2.0 * sigma * c * math.sqrt(d ** 3 * g)
    return (-base - tilt) / denom, (-base + tilt) / denom


def classwise_risk_at(
    t: float,
    params: ModelParams,
    spec: MixupSpec,
    budget: Optional[PerturbationBudget] = None,
) -> RiskPair:
    """Class-wise risks of sign(sum(x) + t) on the (mixup) distribution."""
    if budget is not None:
        budget.check(params)
    r_plus, r_minus = classwise_values(t, params, spec, budget)
    return RiskPair(
        r_plus=r_plus,
        r_minus=r_minus,
        threshold=float(t),
        training=NATURAL if budget is None else ADVERSARIAL,
        variant=_variant(spec),
    )


def _at_optimum(params, spec, budget, constants) -> RiskPair:
    t = constants.threshold
    if is_equal_variance(params):
        z_plus, z_minus = _equal_variance_z(params, spec, budget, constants.K)
        return RiskPair(
            r_plus=std_normal_cdf(z_plus),
            r_minus=std_normal_cdf(z_minus),
            threshold=t,
            training=NATURAL if budget is None else ADVERSARIAL,
            variant=_variant(spec),
        )
    return classwise_risk_at(t, params, spec, budget)


def classwise_natural_risk(params: ModelParams, spec: MixupSpec) -> RiskPair:
    """
    Class-wise natural risks of the optimal (mixup) natural classifier.

    R+ = Phi((-t - d mu_+) / (sqrt(d g) sigma_+)), R- = Phi((t - d mu_-) / (sqrt(d g) sigma_-)).
    g = 1 is plain natural training.
    """
    return _at_optimum(params, spec, None, natural_threshold(params, spec))


def classwise_adversarial_risk(
    params: ModelParams,
    spec: MixupSpec,
    budget: PerturbationBudget,
) -> RiskPair:
    """Class-wise adversarial risks of the optimal (mixup) adversarially trained classifier."""
    return _at_optimum(params, spec, budget, adversarial_threshold(params, spec, budget))


def classwise_risk(
    params: ModelParams,
    spec: MixupSpec,
    budget: Optional[PerturbationBudget] = None,
) -> RiskPair:
    if budget is None:
        return classwise_natural_risk(params, spec)
    return classwise_adversarial_risk(params, spec, budget)


def disparity(pair: RiskPair) -> float:
    """|R+ - R-|."""
    return abs(pair.r_plus - pair.r_minus)


def disparity_closed_form(
    params: ModelParams,
    spec: MixupSpec,
    budget: Optional[PerturbationBudget] = None,
) -> float:
    """
    Delta at the optimal threshold straight from the simplified equal-variance
    arguments, without solving for t. Only defined when sigma_+ = sigma_-.
    """
    if not is_equal_variance(params):
        raise UnsupportedRegimeError(
            f"closed-form disparity needs sigma_+ = sigma_-, got {params.sigma_plus} and {params.sigma_minus}"
        )
    if budget is not None:
        budget.check(params)
    z_plus, z_minus = _equal_variance_z(params, spec, budget, bias_constant_K(params))
    return abs(std_normal_cdf(z_plus) - std_normal_cdf(z_minus))

# analytic/bounds.py
from typing import Optional, Tuple

from gaussian.errors import UndefinedBoundError, UnsupportedRegimeError
from gaussian.types import MixupSpec, ModelParams

from .risks import classwise_risk
from .thresholds import bias_constant_K, is_equal_variance, pooled_sigma
from .types import AnalyticConstants, PerturbationBudget


def ordering_bounds(
    params: ModelParams,
    budget: Optional[PerturbationBudget] = None,
) -> AnalyticConstants:
    """
    Lower bounds on g(lambda) for the four-risk ordering chains.

    A = d^2 (mu_+ + mu_-)^4 / (4 K^2 sigma^4) and, with a budget,
    B = M'^2 / (4 K^2 sigma^4), M' = d^2 (mu_+ + mu_- - 2 eps)^2.
    A_sharp / B_sharp are the exact bounds implied by the class-wise risk
    formulas: the chain holds iff A_sharp <= g <= 1 (B_sharp == B).
    """
    if not is_equal_variance(params):
        raise UnsupportedRegimeError(
            "ordering bounds are only defined for equal class variances "
            f"(sigma_plus={params.sigma_plus}, sigma_minus={params.sigma_minus})"
        )
    K = bias_constant_K(params)
    if K == 0.0:
        raise UndefinedBoundError("ordering bounds are undefined for K = 0: every disparity is already 0")
    sigma = pooled_sigma(params)
    d = params.d
    c = params.class_distance
    scale = 4.0 * K * K * sigma ** 4
    A = (d * d) * c ** 4 / scale
    A_sharp = d ** 4 * c ** 4 / scale
    if budget is None:
        return AnalyticConstants(K=K, A=A, A_sharp=A_sharp)
    budget.check(params)
    shifted = c - 2.0 * budget.epsilon
    M_prime = (d * d) * shifted * shifted
    B = M_prime * M_prime / scale
    return AnalyticConstants(K=K, M_prime=M_prime, A=A, B=B, A_sharp=A_sharp, B_sharp=B)


def ordering_chain(
    params: ModelParams,
    spec: MixupSpec,
    budget: Optional[PerturbationBudget] = None,
) -> Tuple[float, float, float, float]:
    """
    The four risks (favoured plain, favoured mixup, disfavoured mixup, disfavoured plain).

    For K > 0 the favoured class is +1; for K < 0 the classes swap roles.
    The chain is ordered (non-decreasing) whenever the sharp bound holds.
    """
    plain = classwise_risk(params, MixupSpec.plain(), budget)
    mixed = classwise_risk(params, spec, budget)
    if bias_constant_K(params) >= 0:
        return plain.r_plus, mixed.r_plus, mixed.r_minus, plain.r_minus
    return plain.r_minus, mixed.r_minus, mixed.r_plus, plain.r_plus


def chain_holds(chain: Tuple[float, float, float, float], atol: float = 0.0) -> bool:
    return all(a <= b + atol for a, b in zip(chain, chain[1:]))

# classifier/search.py
"""Numeric threshold fitting: coarse grid, then golden-section refinement."""
import logging
import math
from typing import Callable, Optional

import numpy as np

from analytic.objective import classwise_z, overall_risk
from analytic.thresholds import bias_constant_K
from analytic.types import PerturbationBudget
from gaussian.types import MixupSpec, ModelParams

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi
INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0  # 1/phi^2

GRID_POINTS = 1024
MAX_EXPANSIONS = 8


def golden_section(f: Callable[[float], float], a: float, b: float, tol: float = 1e-10) -> float:
    """Minimise a unimodal f on [a, b] until the bracket is narrower than tol."""
    dist = b - a
    if dist <= tol:
        return (a + b) / 2
    n = int(math.ceil(math.log(tol / dist) / math.log(INV_PHI)))

    c = a + INV_PHI_SQ * dist
    d = a + INV_PHI * dist
    yc = f(c)
    yd = f(d)
    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            dist = INV_PHI * dist
            c = a + INV_PHI_SQ * dist
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            dist = INV_PHI * dist
            d = a + INV_PHI * dist
            yd = f(d)
    if yc < yd:
        return (a + d) / 2
    return (c + b) / 2


def _stationarity(params: ModelParams, spec: MixupSpec, budget: Optional[PerturbationBudget]):
    """
    h(t) with sign(h) = sign(dR/dt), in log space:
    h = (z_+^2 - z_-^2) / 2 - log(alpha sigma_- / ((1 - alpha) sigma_+)).
    """
    log_ratio = bias_constant_K(params) / params.d

    def h(t: float) -> float:
        z_plus, z_minus = classwise_z(t, params, spec, budget)
        return 0.5 * (z_plus * z_plus - z_minus * z_minus) - log_ratio

    return h


def fit_threshold_numeric(
    params: ModelParams,
    spec: MixupSpec,
    budget: Optional[PerturbationBudget] = None,
    tol: float = 1e-10,
) -> float:
    """
    Minimiser over t of the overall (mixup) risk of sign(sum(x) + t).

    A 1024-point grid on +-4 d max(mu, sigma) sqrt(d) locates the basin; the
    bracket around the best grid point must contain a sign change of dR/dt
    (widened otherwise). Golden-section search on the risk narrows it to tol,
    then a golden-section pass on |dR/dt| (log form) removes the flat-bottom
    rounding of the risk values.
    """
    if budget is not None:
        budget.check(params)

    def risk(t: float) -> float:
        return float(overall_risk(t, params, spec, budget))

    h = _stationarity(params, spec, budget)
    d = params.d
    scale = max(abs(params.mu_plus), abs(params.mu_minus), params.sigma_plus, params.sigma_minus)
    half_width = 4.0 * d * scale * math.sqrt(d)

    for _ in range(MAX_EXPANSIONS):
        grid = np.linspace(-half_width, half_width, GRID_POINTS)
        values = overall_risk(grid, params, spec, budget)
        best = int(np.argmin(values))
        lo = grid[max(best - 1, 0)]
        hi = grid[min(best + 1, GRID_POINTS - 1)]
        if 0 < best < GRID_POINTS - 1 and h(lo) <= 0 <= h(hi):
            break
        logger.debug("bracket +-%.3g misses the minimum; widening", half_width)
        half_width *= 4.0
    else:
        raise ValueError("could not bracket the risk minimum; check the model parameters")

    coarse = golden_section(risk, lo, hi, tol)
    # Polish on the stationarity condition inside the verified bracket.
    width = max(64.0 * tol, 1e-6 * max(1.0, abs(coarse)))
    a, b = max(lo, coarse - width), min(hi, coarse + width)
    if not h(a) <= 0 <= h(b):
        a, b = lo, hi
    return golden_section(lambda t: abs(h(t)), a, b, tol * 1e-3)

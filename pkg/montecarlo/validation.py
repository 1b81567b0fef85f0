# montecarlo/validation.py
import logging
from typing import List, Optional, Sequence

import numpy as np

from analytic.risks import classwise_risk
from analytic.types import ADVERSARIAL, NATURAL
from classifier.linear import from_threshold
from gaussian.errors import ParameterError, error_tag
from gaussian.utils import write_csv_rows

from .estimator import MIN_SAMPLES, estimate_classwise_risk
from .types import VALIDATION_COLUMNS, GridPoint, ValidationReport

logger = logging.getLogger(__name__)

AUTO = "auto"
VALIDATION_REGIMES = (NATURAL, ADVERSARIAL, AUTO)

DEFAULT_MULTIPLIER = 4.0


def point_seed(seed: int, index: int) -> int:
    """Independent seed for grid point `index`."""
    return int(np.random.default_rng([int(seed), int(index)]).integers(0, 2 ** 63 - 1))


def _resolve_regime(regime: str, point: GridPoint) -> str:
    if regime == AUTO:
        return ADVERSARIAL if point.epsilon > 0 else NATURAL
    return regime


def validate_point(
    regime: str,
    point: GridPoint,
    n: int,
    multiplier: float,
    seed: int,
    block_size: Optional[int] = None,
    workers: int = 1,
) -> ValidationReport:
    """Compare the closed-form class-wise risks with a Monte Carlo estimate at one point."""
    regime = _resolve_regime(regime, point)
    report = ValidationReport(regime=regime, point=point, multiplier=multiplier)
    try:
        params = point.params()
        spec = point.spec()
        budget = point.budget() if regime == ADVERSARIAL else None
        analytic = classwise_risk(params, spec, budget)
        clf = from_threshold(analytic.threshold, params.d)
        estimates = estimate_classwise_risk(
            params, spec, clf, budget, n, seed,
            eval_on_mixup=True, block_size=block_size, workers=workers,
        )
    except ValueError as exc:
        logger.info("grid point %s rejected: %s", point.model_dump(by_alias=True), exc)
        report.error = error_tag(exc)
        return report
    report.analytic = analytic
    report.estimates = estimates
    return report


def validate_formula(
    regime: str,
    grid: Sequence[GridPoint],
    n: int,
    multiplier: float = DEFAULT_MULTIPLIER,
    seed: int = 0,
    block_size: Optional[int] = None,
    workers: int = 1,
) -> List[ValidationReport]:
    """
    Validate the closed-form risks on every grid point.

    regime is "natural", "adversarial", or "auto" (adversarial when the
    point's epsilon > 0). Invalid points become erroring rows.
    """
    if regime not in VALIDATION_REGIMES:
        raise ParameterError(f"regime must be one of {VALIDATION_REGIMES}, got {regime!r}")
    if multiplier < 0:
        raise ParameterError(f"multiplier must be >= 0, got {multiplier}")
    if n < MIN_SAMPLES:
        raise ParameterError(f"n must be >= {MIN_SAMPLES} per class, got {n}")
    reports = [
        validate_point(regime, point, n, multiplier, point_seed(seed, i), block_size, workers)
        for i, point in enumerate(grid)
    ]
    failed = sum(1 for r in reports if not r.passed)
    logger.info("validated %d grid point(s), %d failed", len(reports), failed)
    return reports


def write_validation_csv(reports: Sequence[ValidationReport], path) -> str:
    return write_csv_rows(path, VALIDATION_COLUMNS, (r.to_row() for r in reports))

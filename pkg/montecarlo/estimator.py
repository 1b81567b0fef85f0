# montecarlo/estimator.py
import logging
from typing import Optional, Tuple

import numpy as np

from analytic.types import PerturbationBudget
from classifier.evaluate import error_counts
from classifier.types import LinearClassifier
from gaussian.errors import DimensionMismatchError, ParameterError
from gaussian.mixup import mixed_class_block
from gaussian.sampler import class_block
from gaussian.types import LABELS, MixupSpec, ModelParams
from gaussian.utils import default_block_size, iter_blocks, ordered_map

from .types import RiskEstimate

logger = logging.getLogger(__name__)

MIN_SAMPLES = 10_000


def estimate_classwise_risk(
    params: ModelParams,
    spec: MixupSpec,
    clf: LinearClassifier,
    budget: Optional[PerturbationBudget],
    n: int,
    seed: int,
    eval_on_mixup: bool = True,
    block_size: Optional[int] = None,
    workers: int = 1,
) -> Tuple[RiskEstimate, RiskEstimate]:
    """
    Monte Carlo class-wise risks (R+, R-) of clf with n samples per class.

    Samples come from the mixup distribution when eval_on_mixup is set,
    otherwise from the base model; a budget applies the worst-case l-inf
    perturbation before prediction. Blocks are generated, counted and
    dropped one at a time, and merged by index.
    """
    if n < MIN_SAMPLES:
        raise ParameterError(f"n must be >= {MIN_SAMPLES} per class, got {n}")
    if clf.d != params.d:
        raise DimensionMismatchError(f"classifier has d={clf.d}, model has d={params.d}")
    if budget is not None:
        budget.check(params)
    block_size = block_size or default_block_size()

    def count(job):
        label, (index, length) = job
        if eval_on_mixup:
            X = mixed_class_block(params, spec, label, seed, index, length)
        else:
            X = class_block(params, label, seed, 0, index, length)
        y = np.full(length, label, dtype=np.int64)
        return error_counts(clf, X, y, budget)[label]

    estimates = []
    for label in LABELS:
        jobs = [(label, block) for block in iter_blocks(n, block_size)]
        errors = sum(ordered_map(count, jobs, workers))
        estimates.append(RiskEstimate.from_count(errors, n, seed))
    logger.debug(
        "estimated R+=%.6g R-=%.6g (n=%d, seed=%d, mixup=%s)",
        estimates[0].value, estimates[1].value, n, seed, eval_on_mixup,
    )
    return estimates[0], estimates[1]

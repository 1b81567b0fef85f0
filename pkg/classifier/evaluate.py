# classifier/evaluate.py
from typing import Dict, Optional

import numpy as np

from analytic.types import ADVERSARIAL, NATURAL, PLAIN, PerturbationBudget, RiskPair
from gaussian.errors import DimensionMismatchError, MissingClassError
from gaussian.types import LABELS, Dataset
from gaussian.utils import iter_blocks, ordered_map

from .linear import predict_batch, worst_case_batch
from .types import LinearClassifier

EVAL_CHUNK = 1 << 18


def error_counts(
    clf: LinearClassifier,
    X: np.ndarray,
    y: np.ndarray,
    budget: Optional[PerturbationBudget] = None,
    workers: int = 1,
) -> Dict[int, int]:
    """
    Misclassification counts per class.

    Rows are processed in fixed chunks and merged as integers, so the counts
    do not depend on `workers`.
    """
    if X.shape[1] != clf.d:
        raise DimensionMismatchError(f"classifier has d={clf.d}, data has d={X.shape[1]}")
    epsilon = 0.0 if budget is None else budget.epsilon

    def count(block):
        index, length = block
        rows = slice(index * EVAL_CHUNK, index * EVAL_CHUNK + length)
        Xb, yb = X[rows], y[rows]
        if epsilon > 0:
            Xb = worst_case_batch(clf, Xb, yb, epsilon)
        wrong = predict_batch(clf, Xb) != yb
        return {label: int(np.count_nonzero(wrong & (yb == label))) for label in LABELS}

    totals = {label: 0 for label in LABELS}
    for part in ordered_map(count, list(iter_blocks(len(y), EVAL_CHUNK)), workers):
        for label, value in part.items():
            totals[label] += value
    return totals


def empirical_classwise_risk(
    clf: LinearClassifier,
    data: Dataset,
    budget: Optional[PerturbationBudget] = None,
    workers: int = 1,
) -> RiskPair:
    """Per-class 0/1 error rates on a dataset, natural or under the worst-case l-inf attack."""
    counts = data.class_counts()
    for label in LABELS:
        if counts[label] == 0:
            raise MissingClassError(label)
    errors = error_counts(clf, data.X, data.y, budget, workers)
    return RiskPair(
        r_plus=errors[1] / counts[1],
        r_minus=errors[-1] / counts[-1],
        threshold=clf.threshold,
        training=NATURAL if budget is None else ADVERSARIAL,
        variant=PLAIN,
    )

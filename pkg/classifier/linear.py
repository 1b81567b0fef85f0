# classifier/linear.py
import math
from typing import Sequence, Union

import numpy as np

from analytic.types import PerturbationBudget
from gaussian.errors import DimensionMismatchError, ParameterError

from .types import LinearClassifier

Vector = Union[Sequence[float], np.ndarray]


def from_threshold(t: float, d: int) -> LinearClassifier:
    """Uniform-weight classifier w = 1, b = t."""
    if not isinstance(d, (int, np.integer)) or d < 1:
        raise ParameterError(f"d must be a positive integer, got {d!r}")
    if not math.isfinite(t):
        raise ParameterError(f"threshold must be finite, got {t!r}")
    return LinearClassifier(w=np.ones(int(d)), b=float(t))


def sign_plus(values: np.ndarray) -> np.ndarray:
    """Elementwise sign with sign(0) = +1."""
    return np.where(np.asarray(values) >= 0, 1, -1)


def _as_matrix(clf: LinearClassifier, X: Vector) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim == 1:
        X = X[None, :]
    if X.ndim != 2 or X.shape[1] != clf.d:
        raise DimensionMismatchError(f"expected vectors of length {clf.d}, got shape {X.shape}")
    return X


def decision(clf: LinearClassifier, X: Vector) -> np.ndarray:
    return _as_matrix(clf, X) @ clf.w + clf.b


def predict_batch(clf: LinearClassifier, X: Vector) -> np.ndarray:
    return sign_plus(decision(clf, X)).astype(np.int64)


def predict(clf: LinearClassifier, x: Vector) -> int:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise DimensionMismatchError(f"predict takes one vector, got shape {x.shape}")
    return int(predict_batch(clf, x)[0])


def margin(clf: LinearClassifier, X: Vector, y) -> np.ndarray:
    """Signed margin y * (<w, x> + b)."""
    return np.asarray(y) * decision(clf, X)


def worst_case_batch(clf: LinearClassifier, X: Vector, y, epsilon: float) -> np.ndarray:
    """x' = x - y * eps * sign(w) for every row; lowers each margin by eps * ||w||_1."""
    X = _as_matrix(clf, X)
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    if y.shape[0] != X.shape[0]:
        raise DimensionMismatchError(f"{X.shape[0]} vectors but {y.shape[0]} labels")
    if epsilon == 0:
        return X.copy()
    return X - epsilon * y[:, None] * sign_plus(clf.w)[None, :]


def worst_case_perturbation(
    clf: LinearClassifier,
    x: Vector,
    y: int,
    budget: PerturbationBudget,
) -> np.ndarray:
    """Minimiser of y * (<w, x'> + b) over the l-inf ball of radius eps around x."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise DimensionMismatchError(f"worst_case_perturbation takes one vector, got shape {x.shape}")
    return worst_case_batch(clf, x, [y], budget.epsilon)[0]

# trainer/attacks.py
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np
import torch
import torch.nn.functional as F

from classifier.linear import sign_plus
from classifier.types import LinearClassifier
from gaussian.errors import AttackMismatchError, DimensionMismatchError, ParameterError
from gaussian.mixup import mix, plan_pairs
from gaussian.types import MixupSpec

logger = logging.getLogger(__name__)

Model = Union[LinearClassifier, torch.nn.Linear]


def logistic_loss(logits: torch.Tensor, y: torch.Tensor) -> torch.Tensor:
    """Per-sample log(1 + exp(-y f(x)))."""
    return F.softplus(-y * logits)


def _forward(model: Model, X: torch.Tensor) -> torch.Tensor:
    if isinstance(model, LinearClassifier):
        w = torch.as_tensor(model.w, dtype=X.dtype)
        return X @ w + model.b
    return model(X).squeeze(-1)


def fgsm_tensor(model: Model, X: torch.Tensor, y: torch.Tensor, epsilon: float) -> torch.Tensor:
    """
    One FGSM step x + eps * sign(grad_x loss), detached from the model graph.

    epsilon = 0 returns X untouched (no gradient pass).
    """
    if epsilon < 0:
        raise ParameterError(f"epsilon must be >= 0, got {epsilon}")
    if epsilon == 0:
        return X
    X_adv = X.detach().clone().requires_grad_(True)
    loss = logistic_loss(_forward(model, X_adv), y).sum()
    (grad,) = torch.autograd.grad(loss, X_adv)
    with torch.no_grad():
        return X.detach() + epsilon * torch.sign(grad)


def fgsm_perturb(clf: LinearClassifier, X, y, epsilon: float) -> np.ndarray:
    """
    FGSM on a batch for a linear classifier.

    For the logistic loss, sign(grad_x) = -y * sign(w), so the result equals
    the exact worst-case l-inf perturbation whenever w has no zero entry;
    AttackMismatchError is raised if it does not.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim == 1:
        X = X[None, :]
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    if X.shape[1] != clf.d or X.shape[0] != y.shape[0]:
        raise DimensionMismatchError(
            f"batch shape {X.shape} with {y.shape[0]} labels does not fit a d={clf.d} classifier"
        )
    out = fgsm_tensor(clf, torch.from_numpy(X), torch.from_numpy(y), epsilon).numpy().copy()
    if epsilon > 0 and np.all(clf.w != 0):
        expected = X - epsilon * y[:, None] * sign_plus(clf.w)[None, :]
        mismatched = int(np.sum(np.any(out != expected, axis=1)))
        if mismatched:
            raise AttackMismatchError(mismatched, out.shape[0])
    return out


@dataclass
class MixedBatch:
    X: np.ndarray
    y: np.ndarray
    short_classes: List[int]

    @property
    def underfilled(self) -> bool:
        return bool(self.short_classes)


def mix_batch(X: np.ndarray, y: np.ndarray, spec: MixupSpec, seed: int, salt: Sequence[int] = ()) -> MixedBatch:
    """
    Same-class mixup inside a batch.

    Classes with a single sample pass through unmixed.
    """
    plan = plan_pairs(y, spec, seed, salt=salt, strict=False)
    parts_X = [mix(X, plan)]
    parts_y = [plan.labels]
    for label in plan.short_classes:
        keep = y == label
        parts_X.append(X[keep])
        parts_y.append(y[keep])
        logger.debug("class %+d under-filled in batch; passing through unmixed", label)
    return MixedBatch(
        X=np.concatenate(parts_X, axis=0),
        y=np.concatenate(parts_y, axis=0).astype(np.int64),
        short_classes=list(plan.short_classes),
    )


def make_mixup_adversarial_batch(
    clf: LinearClassifier,
    X,
    y,
    epsilon: float,
    lam: float,
    seed: int,
    uniform: bool = False,
) -> MixedBatch:
    """Mix same-class pairs with lambda, then perturb the mixed points with FGSM."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    mixed = mix_batch(X, y, MixupSpec(lam=lam, uniform=uniform), seed)
    if mixed.y.size and epsilon > 0:
        mixed.X = fgsm_perturb(clf, mixed.X, mixed.y, epsilon)
    return mixed


def split_batches(n: int, batch_size: int, order: np.ndarray) -> List[np.ndarray]:
    return [order[start:start + batch_size] for start in range(0, n, batch_size)]


def as_tensors(X: np.ndarray, y: np.ndarray) -> Tuple[torch.Tensor, torch.Tensor]:
    return torch.from_numpy(np.ascontiguousarray(X, dtype=np.float64)), torch.from_numpy(
        np.ascontiguousarray(y, dtype=np.float64)
    )

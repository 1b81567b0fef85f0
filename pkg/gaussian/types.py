# gaussian/types.py
import math
from dataclasses import dataclass, field, replace
from typing import Dict, Iterator, Optional, Tuple

import numpy as np

from .errors import DomainError, ParameterError, UnsupportedRegimeError

LABELS: Tuple[int, int] = (1, -1)


@dataclass(frozen=True)
class ModelParams:
    """
    Class-conditional Gaussian model.

    Class +1 has mean mu_plus * 1 and covariance sigma_plus^2 I, class -1 has
    mean -mu_minus * 1 and covariance sigma_minus^2 I; alpha = P(y = +1).
    """
    mu_plus: float
    mu_minus: float
    sigma_plus: float
    sigma_minus: float
    alpha: float
    d: int

    def __post_init__(self):
        for name in ("mu_plus", "mu_minus", "sigma_plus", "sigma_minus", "alpha"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ParameterError(f"{name} must be a finite real, got {value!r}")
        if isinstance(self.d, bool) or not isinstance(self.d, (int, np.integer)) or self.d < 1:
            raise ParameterError(f"d must be a positive integer, got {self.d!r}")
        if self.sigma_plus <= 0 or self.sigma_minus <= 0:
            raise ParameterError(
                f"standard deviations must be positive, got "
                f"sigma_plus={self.sigma_plus}, sigma_minus={self.sigma_minus}"
            )
        if not 0.0 < self.alpha < 1.0:
            raise ParameterError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.mu_plus + self.mu_minus <= 0:
            raise ParameterError(
                f"classes are not separated: mu_plus + mu_minus = {self.mu_plus + self.mu_minus}"
            )

    @property
    def class_distance(self) -> float:
        return self.mu_plus + self.mu_minus

    @property
    def equal_variance(self) -> bool:
        return self.sigma_plus == self.sigma_minus

    def mean(self, label: int) -> np.ndarray:
        """Mean vector of a class."""
        if label == 1:
            return np.full(self.d, float(self.mu_plus))
        return np.full(self.d, -float(self.mu_minus))

    def sigma(self, label: int) -> float:
        return self.sigma_plus if label == 1 else self.sigma_minus

    def with_(self, **changes) -> "ModelParams":
        """Copy with fields substituted (re-validated)."""
        return replace(self, **changes)

    def to_dict(self) -> Dict:
        return {
            "mu_plus": self.mu_plus,
            "mu_minus": self.mu_minus,
            "sigma_plus": self.sigma_plus,
            "sigma_minus": self.sigma_minus,
            "alpha": self.alpha,
            "d": int(self.d),
        }


def g_lambda(lam: float) -> float:
    """Variance contraction factor of same-class mixup: lam^2 + (1 - lam)^2."""
    if not isinstance(lam, (int, float)) or not math.isfinite(lam) or not 0.0 <= lam <= 1.0:
        raise DomainError(f"lambda must lie in [0, 1], got {lam!r}")
    return lam * lam + (1.0 - lam) * (1.0 - lam)


@dataclass(frozen=True)
class MixupSpec:
    """Mixing coefficient; g is always derived, never stored."""
    lam: float = 0.0
    uniform: bool = False  # per-pair lam ~ U(0, 1) instead of the fixed lam

    def __post_init__(self):
        g_lambda(self.lam)

    @property
    def g(self) -> float:
        return g_lambda(self.lam)

    def fixed_g(self) -> float:
        """g of a fixed lam; a per-pair U(0, 1) lam has no closed-form mixed distribution."""
        if self.uniform:
            raise UnsupportedRegimeError("closed-form mixup needs a fixed lambda, got uniform_lambda")
        return self.g

    @classmethod
    def plain(cls) -> "MixupSpec":
        return cls(lam=0.0)


@dataclass(frozen=True)
class LabeledSample:
    x: Tuple[float, ...]
    y: int


@dataclass(eq=False)
class Dataset:
    """
    Ordered labelled samples stored column-wise.

    X has shape (n, d), y has shape (n,) with entries in {-1, +1}.
    """
    X: np.ndarray
    y: np.ndarray
    params: ModelParams
    seed: int
    metadata: Dict = field(default_factory=dict)

    def __post_init__(self):
        self.X = np.asarray(self.X, dtype=np.float64)
        self.y = np.asarray(self.y, dtype=np.int64)
        if self.X.ndim != 2 or self.X.shape[1] != self.params.d:
            raise ParameterError(
                f"features must have shape (n, {self.params.d}), got {self.X.shape}"
            )
        if self.y.shape != (self.X.shape[0],):
            raise ParameterError(f"labels must have shape ({self.X.shape[0]},), got {self.y.shape}")
        if self.y.size and not np.all(np.isin(self.y, LABELS)):
            raise ParameterError("labels must be -1 or +1")

    def __len__(self) -> int:
        return int(self.y.shape[0])

    @property
    def samples(self) -> Iterator[LabeledSample]:
        for row, label in zip(self.X, self.y):
            yield LabeledSample(x=tuple(float(v) for v in row), y=int(label))

    def class_counts(self) -> Dict[int, int]:
        return {label: int(np.count_nonzero(self.y == label)) for label in LABELS}

    def subset(self, mask: np.ndarray, seed: Optional[int] = None) -> "Dataset":
        return Dataset(
            X=self.X[mask],
            y=self.y[mask],
            params=self.params,
            seed=self.seed if seed is None else seed,
            metadata=dict(self.metadata),
        )

    def split(self, holdout_fraction: float = 0.2) -> Tuple["Dataset", "Dataset"]:
        """Deterministic (train, held-out) split derived from the dataset seed."""
        if not 0.0 < holdout_fraction < 1.0:
            raise ParameterError(f"holdout_fraction must lie in (0, 1), got {holdout_fraction}")
        n = len(self)
        order = np.random.default_rng([self.seed, SPLIT_STREAM]).permutation(n)
        n_holdout = int(round(n * holdout_fraction))
        holdout = np.zeros(n, dtype=bool)
        holdout[order[:n_holdout]] = True
        return self.subset(~holdout), self.subset(holdout)


# Stream ids keep independent draws from sharing a generator.
LABEL_STREAM = 0
FEATURE_STREAM = 1
SPLIT_STREAM = 2
PAIR_STREAM = 3
UNIFORM_LAMBDA_STREAM = 4
CLASS_STREAM_BASE = 16

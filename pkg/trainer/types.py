# trainer/types.py
import math
from dataclasses import asdict, dataclass, field
from typing import Dict, List

import numpy as np

from analytic.types import RiskPair
from classifier.types import LinearClassifier
from gaussian.errors import ParameterError

NATURAL = "natural"
ADVERSARIAL = "adversarial"
MIXUP_ADVERSARIAL = "mixup_adversarial"
MIXUP_NATURAL = "mixup_natural"
TRAIN_REGIMES = (NATURAL, ADVERSARIAL, MIXUP_ADVERSARIAL, MIXUP_NATURAL)
OPTIMIZERS = ("adam", "sgd")


@dataclass(frozen=True)
class TrainConfig:
    """Training hyperparameters (defaults: batch 256, lr 1e-3 decayed x0.1 every 50 epochs, 80 epochs)."""
    epochs: int = 80
    batch_size: int = 256
    learning_rate: float = 1e-3
    lr_decay_factor: float = 0.1
    lr_decay_every: int = 50
    seed: int = 0
    regime: str = NATURAL
    epsilon: float = 0.0
    lam: float = 0.5
    uniform_lambda: bool = False
    optimizer: str = "adam"
    momentum: float = 0.0
    holdout_fraction: float = 0.2

    def __post_init__(self):
        if self.regime not in TRAIN_REGIMES:
            raise ParameterError(f"regime must be one of {TRAIN_REGIMES}, got {self.regime!r}")
        if self.optimizer not in OPTIMIZERS:
            raise ParameterError(f"optimizer must be one of {OPTIMIZERS}, got {self.optimizer!r}")
        for name in ("epochs", "batch_size", "lr_decay_every"):
            if getattr(self, name) < 1:
                raise ParameterError(f"{name} must be >= 1, got {getattr(self, name)}")
        if not self.learning_rate > 0:
            raise ParameterError(f"learning_rate must be > 0, got {self.learning_rate}")
        if not 0 < self.lr_decay_factor <= 1:
            raise ParameterError(f"lr_decay_factor must lie in (0, 1], got {self.lr_decay_factor}")
        if not math.isfinite(self.epsilon) or self.epsilon < 0:
            raise ParameterError(f"epsilon must be >= 0, got {self.epsilon}")
        if not 0 <= self.lam <= 1:
            raise ParameterError(f"lambda must lie in [0, 1], got {self.lam}")
        if not 0 <= self.momentum < 1:
            raise ParameterError(f"momentum must lie in [0, 1), got {self.momentum}")

    @property
    def perturbs(self) -> bool:
        return self.regime in (ADVERSARIAL, MIXUP_ADVERSARIAL)

    @property
    def mixes(self) -> bool:
        return self.regime in (MIXUP_ADVERSARIAL, MIXUP_NATURAL)

    def to_dict(self) -> Dict:
        return asdict(self)


def class_risk_summary(pair: RiskPair) -> Dict[str, float]:
    """Avg / std / min / max over class-wise risks plus the disparity."""
    risks = np.array([pair.r_plus, pair.r_minus])
    return {
        "avg": float(risks.mean()),
        "std": float(risks.std()),
        "min": float(risks.min()),
        "max": float(risks.max()),
        "delta": pair.delta,
    }


@dataclass
class TrainReport:
    """Outcome of one training run; risks are measured on the held-out split."""
    config: TrainConfig
    classifier: LinearClassifier
    epoch_losses: List[float]
    natural: RiskPair
    adversarial: RiskPair
    n_train: int
    n_holdout: int
    unmixed_batches: int = 0
    metadata: Dict = field(default_factory=dict)

    @property
    def delta_nat(self) -> float:
        return self.natural.delta

    @property
    def delta_adv(self) -> float:
        return self.adversarial.delta

    def summary(self) -> Dict[str, Dict[str, float]]:
        return {
            "natural": class_risk_summary(self.natural),
            "adversarial": class_risk_summary(self.adversarial),
        }

    def to_dict(self) -> Dict:
        return {
            "config": self.config.to_dict(),
            "classifier": self.classifier.to_dict(),
            "threshold": self.classifier.threshold,
            "epoch_losses": list(self.epoch_losses),
            "natural": self.natural.to_dict(),
            "adversarial": self.adversarial.to_dict(),
            "summary": self.summary(),
            "n_train": self.n_train,
            "n_holdout": self.n_holdout,
            "unmixed_batches": self.unmixed_batches,
            "metadata": dict(self.metadata),
        }

# analytic/types.py
import math
from dataclasses import dataclass
from typing import Dict, Optional

from gaussian.errors import ParameterError, SeparationExceededError
from gaussian.types import ModelParams

NATURAL = "natural"
ADVERSARIAL = "adversarial"
PLAIN = "plain"
MIXUP = "mixup"

REGIMES = (
    (NATURAL, PLAIN),
    (NATURAL, MIXUP),
    (ADVERSARIAL, PLAIN),
    (ADVERSARIAL, MIXUP),
)


def regime_tag(training: str, variant: str) -> str:
    return f"{training}_{variant}"


@dataclass(frozen=True)
class PerturbationBudget:
    """l-infinity radius of the adversary."""
    epsilon: float = 0.0

    def __post_init__(self):
        if not isinstance(self.epsilon, (int, float)) or not math.isfinite(self.epsilon) or self.epsilon < 0:
            raise ParameterError(f"epsilon must be a finite real >= 0, got {self.epsilon!r}")

    def check(self, params: ModelParams) -> None:
        """Reject budgets that erase the class gap."""
        if 2.0 * self.epsilon >= params.class_distance:
            raise SeparationExceededError(self.epsilon, params.class_distance)


@dataclass(frozen=True)
class AnalyticConstants:
    """Constants of the closed-form analysis; fields a regime does not define stay None."""
    K: float
    eta_star: Optional[float] = None
    t_star: Optional[float] = None
    s_star: Optional[float] = None
    M: Optional[float] = None
    M_prime: Optional[float] = None
    A: Optional[float] = None
    B: Optional[float] = None
    A_sharp: Optional[float] = None
    B_sharp: Optional[float] = None
    other_root: Optional[float] = None

    @property
    def threshold(self) -> Optional[float]:
        for value in (self.s_star, self.eta_star, self.t_star):
            if value is not None:
                return value
        return None

    def to_dict(self) -> Dict:
        return {
            "K": self.K,
            "eta_star": self.eta_star,
            "t_star": self.t_star,
            "s_star": self.s_star,
            "M": self.M,
            "M_prime": self.M_prime,
            "A": self.A,
            "B": self.B,
            "A_sharp": self.A_sharp,
            "B_sharp": self.B_sharp,
        }


@dataclass(frozen=True)
class RiskPair:
    """Class-wise risks of one classifier and the threshold t = b / w producing them."""
    r_plus: float
    r_minus: float
    threshold: float
    training: str = NATURAL
    variant: str = PLAIN

    def __post_init__(self):
        for name in ("r_plus", "r_minus"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ParameterError(f"{name} must lie in [0, 1], got {value}")

    @property
    def delta(self) -> float:
        return abs(self.r_plus - self.r_minus)

    @property
    def regime(self) -> str:
        return regime_tag(self.training, self.variant)

    @property
    def favored_class(self) -> int:
        """Class with the lower risk (+1 on ties)."""
        return 1 if self.r_plus <= self.r_minus else -1

    @property
    def worst(self) -> float:
        return max(self.r_plus, self.r_minus)

    def to_dict(self) -> Dict:
        return {
            "regime": self.regime,
            "r_plus": self.r_plus,
            "r_minus": self.r_minus,
            "delta": self.delta,
            "threshold": self.threshold,
            "favored_class": self.favored_class,
        }

# montecarlo/types.py
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from analytic.types import PerturbationBudget, RiskPair
from gaussian.types import MixupSpec, ModelParams


@dataclass(frozen=True)
class RiskEstimate:
    """Monte Carlo class-wise risk with its binomial standard error."""
    value: float
    stderr: float
    n: int
    seed: int

    @classmethod
    def from_count(cls, errors: int, n: int, seed: int) -> "RiskEstimate":
        value = errors / n
        return cls(value=value, stderr=math.sqrt(value * (1.0 - value) / n), n=n, seed=seed)


class GridPoint(BaseModel):
    """One parameter point of a validation grid or sweep (raw numbers, validated on use)."""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    d: int
    mu_plus: float
    mu_minus: float
    sigma_plus: float = 1.0
    sigma_minus: float = 1.0
    alpha: float = 0.5
    lam: float = Field(default=0.0, alias="lambda")
    epsilon: float = 0.0

    def params(self) -> ModelParams:
        return ModelParams(
            mu_plus=self.mu_plus,
            mu_minus=self.mu_minus,
            sigma_plus=self.sigma_plus,
            sigma_minus=self.sigma_minus,
            alpha=self.alpha,
            d=self.d,
        )

    def spec(self) -> MixupSpec:
        return MixupSpec(lam=self.lam)

    def budget(self) -> PerturbationBudget:
        return PerturbationBudget(epsilon=self.epsilon)


@dataclass
class ValidationReport:
    """Analytic vs Monte Carlo comparison at one grid point."""
    regime: str
    point: GridPoint
    multiplier: float
    analytic: Optional[RiskPair] = None
    estimates: Optional[Tuple[RiskEstimate, RiskEstimate]] = None
    error: Optional[str] = None

    def comparison_stderr(self, index: int) -> float:
        """
        Standard error used for the pass test: the estimate's own, floored by
        the binomial error at the analytic value (a zero-count estimate of a
        tiny risk would otherwise have stderr 0).
        """
        estimate = self.estimates[index]
        p = (self.analytic.r_plus, self.analytic.r_minus)[index]
        return max(estimate.stderr, math.sqrt(p * (1.0 - p) / estimate.n))

    def class_passes(self) -> Tuple[bool, bool]:
        if self.error is not None or self.analytic is None or self.estimates is None:
            return False, False
        analytic = (self.analytic.r_plus, self.analytic.r_minus)
        return tuple(
            abs(analytic[i] - self.estimates[i].value) <= self.multiplier * self.comparison_stderr(i)
            for i in range(2)
        )

    @property
    def passed(self) -> bool:
        return all(self.class_passes())

    def to_row(self) -> Dict:
        p = self.point
        row = {
            "regime": self.regime,
            "d": p.d,
            "mu_plus": p.mu_plus,
            "mu_minus": p.mu_minus,
            "sigma_plus": p.sigma_plus,
            "sigma_minus": p.sigma_minus,
            "alpha": p.alpha,
            "lambda": p.lam,
            "epsilon": p.epsilon,
            "analytic_plus": None,
            "analytic_minus": None,
            "mc_plus": None,
            "mc_minus": None,
            "stderr_plus": None,
            "stderr_minus": None,
        }
        if self.analytic is not None:
            row["analytic_plus"] = self.analytic.r_plus
            row["analytic_minus"] = self.analytic.r_minus
        if self.estimates is not None:
            row["mc_plus"] = self.estimates[0].value
            row["mc_minus"] = self.estimates[1].value
            row["stderr_plus"] = self.estimates[0].stderr
            row["stderr_minus"] = self.estimates[1].stderr
        row["pass"] = f"error:{self.error}" if self.error is not None else ("true" if self.passed else "false")
        return row


VALIDATION_COLUMNS = [
    "regime", "d", "mu_plus", "mu_minus", "sigma_plus", "sigma_minus", "alpha", "lambda", "epsilon",
    "analytic_plus", "analytic_minus", "mc_plus", "mc_minus", "stderr_plus", "stderr_minus", "pass",
]

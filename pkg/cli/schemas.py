# cli/schemas.py
"""Run configuration documents (one flat JSON object per run)."""
import json
from pathlib import Path
from typing import List, Literal, Optional, Type, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from analytic.types import REGIMES, regime_tag
from gaussian.errors import ParameterError
from gaussian.types import ModelParams
from montecarlo.estimator import MIN_SAMPLES
from montecarlo.types import GridPoint
from montecarlo.validation import DEFAULT_MULTIPLIER, VALIDATION_REGIMES
from trainer.types import NATURAL, OPTIMIZERS, TRAIN_REGIMES

M = TypeVar("M", bound=BaseModel)

REGIME_TAGS = tuple(regime_tag(training, variant) for training, variant in REGIMES)


class ConfigError(ParameterError):
    """A run configuration is malformed; the message names the offending key."""


class SweepConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    axis: Literal["class_distance", "epsilon", "dimension", "lambda"]
    grid: List[float] = Field(min_length=1)
    fixed: GridPoint
    regimes: List[str] = Field(default_factory=lambda: list(REGIME_TAGS))
    mc_n: int = Field(default=0, ge=0)
    seed: int = 0

    @field_validator("regimes")
    @classmethod
    def _known_regimes(cls, value: List[str]) -> List[str]:
        unknown = [r for r in value if r not in REGIME_TAGS]
        if unknown:
            raise ValueError(f"unknown regime(s) {unknown}; expected a subset of {list(REGIME_TAGS)}")
        if not value:
            raise ValueError("at least one regime is required")
        return value

    @field_validator("mc_n")
    @classmethod
    def _enough_samples(cls, value: int) -> int:
        if 0 < value < MIN_SAMPLES:
            raise ValueError(f"must be 0 (analytic only) or >= {MIN_SAMPLES}")
        return value


class ValidateConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    preset: Optional[str] = None
    grid_file: Optional[str] = None
    regime: Optional[str] = None
    n: int = Field(default=1_000_000, ge=10_000)
    multiplier: float = Field(default=DEFAULT_MULTIPLIER, ge=0)
    seed: int = 0

    @field_validator("regime")
    @classmethod
    def _known_regime(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and value not in VALIDATION_REGIMES:
            raise ValueError(f"expected one of {list(VALIDATION_REGIMES)}")
        return value


class TrainRunConfig(BaseModel):
    """Data model, sample size, training hyperparameters and the seeds to run."""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    d: int
    mu_plus: float
    mu_minus: float
    sigma_plus: float = 1.0
    sigma_minus: float = 1.0
    alpha: float = 0.5
    n: int = Field(default=20_000, ge=10)
    regimes: List[str] = Field(default_factory=lambda: [NATURAL])
    epochs: int = 80
    batch_size: int = 256
    learning_rate: float = 1e-3
    lr_decay_factor: float = 0.1
    lr_decay_every: int = 50
    epsilon: float = 0.0
    lam: float = Field(default=0.5, alias="lambda")
    uniform_lambda: bool = False
    optimizer: str = "adam"
    momentum: float = 0.0
    holdout_fraction: float = 0.2
    seeds: List[int] = Field(default_factory=lambda: [0], min_length=1)
    log_epochs: bool = False
    export_data: bool = False

    @field_validator("regimes")
    @classmethod
    def _known_regimes(cls, value: List[str]) -> List[str]:
        unknown = [r for r in value if r not in TRAIN_REGIMES]
        if unknown or not value:
            raise ValueError(f"expected a non-empty subset of {list(TRAIN_REGIMES)}, got {value}")
        return value

    @field_validator("optimizer")
    @classmethod
    def _known_optimizer(cls, value: str) -> str:
        if value not in OPTIMIZERS:
            raise ValueError(f"expected one of {list(OPTIMIZERS)}")
        return value

    def params(self) -> ModelParams:
        return ModelParams(
            mu_plus=self.mu_plus,
            mu_minus=self.mu_minus,
            sigma_plus=self.sigma_plus,
            sigma_minus=self.sigma_minus,
            alpha=self.alpha,
            d=self.d,
        )


def describe_validation_error(exc: ValidationError) -> str:
    first = exc.errors()[0]
    key = ".".join(str(part) for part in first["loc"]) or "<root>"
    extra = f" (+{exc.error_count() - 1} more)" if exc.error_count() > 1 else ""
    return f"invalid key '{key}': {first['msg']}{extra}"


def parse_config(data: dict, model: Type[M]) -> M:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise ConfigError(describe_validation_error(e))


def load_config(path: Union[str, Path], model: Type[M]) -> M:
    """
    Load a JSON run configuration.
    Raises ConfigError naming the offending key, or when the file is missing.
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"{path} is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must hold a JSON object")
    return parse_config(data, model)

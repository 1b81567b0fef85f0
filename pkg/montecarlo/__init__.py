from .types import RiskEstimate, GridPoint, ValidationReport, VALIDATION_COLUMNS
from .estimator import estimate_classwise_risk, MIN_SAMPLES
from .validation import (
    validate_formula,
    validate_point,
    write_validation_csv,
    point_seed,
    DEFAULT_MULTIPLIER,
    AUTO,
    VALIDATION_REGIMES,
)
from .registry import Grid, GridRegistry, load_grid_file, parse_grid

__all__ = [
    "RiskEstimate",
    "GridPoint",
    "ValidationReport",
    "VALIDATION_COLUMNS",
    "estimate_classwise_risk",
    "MIN_SAMPLES",
    "validate_formula",
    "validate_point",
    "write_validation_csv",
    "VALIDATION_REGIMES",
    "point_seed",
    "DEFAULT_MULTIPLIER",
    "AUTO",
    "Grid",
    "GridRegistry",
    "load_grid_file",
    "parse_grid",
]

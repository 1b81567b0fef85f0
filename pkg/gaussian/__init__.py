from .errors import (
    ParameterError,
    DomainError,
    InsufficientPairsError,
    SeparationExceededError,
    NoRealRootError,
    UndefinedBoundError,
    UnsupportedRegimeError,
    DimensionMismatchError,
    MissingClassError,
    TrainingDivergedError,
    AttackMismatchError,
    error_tag,
)
from .types import ModelParams, MixupSpec, LabeledSample, Dataset, g_lambda, LABELS
from .sampler import sample_labeled, sample_class, class_block
from .mixup import (
    mixup_distribution,
    sample_mixup_pairs,
    sample_mixed_class,
    mixed_class_block,
    plan_pairs,
    mix,
    PairPlan,
)
from .utils import write_dataset_csv, read_dataset_csv, write_csv_rows, format_value

__all__ = [
    "ParameterError",
    "DomainError",
    "InsufficientPairsError",
    "SeparationExceededError",
    "NoRealRootError",
    "UndefinedBoundError",
    "UnsupportedRegimeError",
    "DimensionMismatchError",
    "MissingClassError",
    "TrainingDivergedError",
    "AttackMismatchError",
    "error_tag",
    "ModelParams",
    "MixupSpec",
    "LabeledSample",
    "Dataset",
    "g_lambda",
    "LABELS",
    "sample_labeled",
    "sample_class",
    "class_block",
    "mixup_distribution",
    "sample_mixup_pairs",
    "sample_mixed_class",
    "mixed_class_block",
    "plan_pairs",
    "mix",
    "PairPlan",
    "write_dataset_csv",
    "read_dataset_csv",
    "write_csv_rows",
    "format_value",
]

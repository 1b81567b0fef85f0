from .types import (
    TrainConfig,
    TrainReport,
    class_risk_summary,
    NATURAL,
    ADVERSARIAL,
    MIXUP_ADVERSARIAL,
    MIXUP_NATURAL,
    TRAIN_REGIMES,
    OPTIMIZERS,
)
from .attacks import (
    fgsm_perturb,
    fgsm_tensor,
    logistic_loss,
    mix_batch,
    make_mixup_adversarial_batch,
    MixedBatch,
)
from .trainer import train, build_model, to_classifier
from .logger import TrainingLogger

__all__ = [
    "TrainConfig",
    "TrainReport",
    "class_risk_summary",
    "NATURAL",
    "ADVERSARIAL",
    "MIXUP_ADVERSARIAL",
    "MIXUP_NATURAL",
    "TRAIN_REGIMES",
    "OPTIMIZERS",
    "fgsm_perturb",
    "fgsm_tensor",
    "logistic_loss",
    "mix_batch",
    "make_mixup_adversarial_batch",
    "MixedBatch",
    "train",
    "build_model",
    "to_classifier",
    "TrainingLogger",
]

# trainer/trainer.py
import logging
import math
from typing import Optional

import numpy as np
import torch

from analytic.types import PerturbationBudget
from classifier.evaluate import empirical_classwise_risk
from classifier.types import LinearClassifier
from gaussian.errors import MissingClassError, TrainingDivergedError
from gaussian.types import LABELS, Dataset, MixupSpec

from .attacks import as_tensors, fgsm_tensor, logistic_loss, mix_batch, split_batches
from .logger import TrainingLogger
from .types import TrainConfig, TrainReport

logger = logging.getLogger(__name__)

BATCH_ORDER_STREAM = 5


def build_model(d: int) -> torch.nn.Linear:
    """Zero-initialised float64 logistic model, so runs depend only on the seed."""
    model = torch.nn.Linear(d, 1, dtype=torch.float64)
    with torch.no_grad():
        model.weight.zero_()
        model.bias.zero_()
    return model


def build_optimizer(model: torch.nn.Module, config: TrainConfig) -> torch.optim.Optimizer:
    if config.optimizer == "sgd":
        return torch.optim.SGD(model.parameters(), lr=config.learning_rate, momentum=config.momentum)
    return torch.optim.Adam(model.parameters(), lr=config.learning_rate)


def to_classifier(model: torch.nn.Linear) -> LinearClassifier:
    with torch.no_grad():
        return LinearClassifier(
            w=model.weight.detach().reshape(-1).numpy().copy(),
            b=float(model.bias.detach().item()),
        )


def train(data: Dataset, config: TrainConfig, training_logger: Optional[TrainingLogger] = None) -> TrainReport:
    """
    Train a linear logistic classifier and report held-out class-wise risks.

    Each mini-batch is optionally mixed within classes and then FGSM-perturbed
    against the current model, depending on config.regime. The result is
    deterministic given the dataset and config.seed.
    """
    counts = data.class_counts()
    for label in LABELS:
        if counts[label] == 0:
            raise MissingClassError(label)

    train_set, holdout = data.split(config.holdout_fraction)
    n = len(train_set)
    torch.manual_seed(config.seed)

    model = build_model(data.params.d)
    optimizer = build_optimizer(model, config)
    scheduler = torch.optim.lr_scheduler.StepLR(
        optimizer, step_size=config.lr_decay_every, gamma=config.lr_decay_factor
    )
    spec = MixupSpec(lam=config.lam, uniform=config.uniform_lambda)

    epoch_losses = []
    unmixed_batches = 0
    for epoch in range(config.epochs):
        order = np.random.default_rng([config.seed, BATCH_ORDER_STREAM, epoch]).permutation(n)
        total, seen = 0.0, 0
        for batch_index, idx in enumerate(split_batches(n, config.batch_size, order)):
            Xb, yb = train_set.X[idx], train_set.y[idx]
            if config.mixes:
                mixed = mix_batch(Xb, yb, spec, config.seed, salt=(epoch, batch_index))
                if mixed.underfilled:
                    unmixed_batches += 1
                Xb, yb = mixed.X, mixed.y
            X_t, y_t = as_tensors(Xb, yb)
            if config.perturbs:
                X_t = fgsm_tensor(model, X_t, y_t, config.epsilon)

            optimizer.zero_grad()
            loss = logistic_loss(model(X_t).squeeze(-1), y_t).mean()
            loss.backward()
            optimizer.step()

            total += float(loss.item()) * y_t.shape[0]
            seen += y_t.shape[0]

        epoch_loss = total / seen
        if not math.isfinite(epoch_loss):
            raise TrainingDivergedError(epoch, epoch_loss)
        epoch_losses.append(epoch_loss)
        logger.debug("epoch %d loss=%.6f lr=%.2e", epoch, epoch_loss, scheduler.get_last_lr()[0])
        if training_logger is not None:
            training_logger.log_epoch(epoch, epoch_loss, {"regime": config.regime, "seed": config.seed})
        scheduler.step()

    clf = to_classifier(model)
    natural = empirical_classwise_risk(clf, holdout)
    adversarial = empirical_classwise_risk(clf, holdout, PerturbationBudget(config.epsilon))
    if unmixed_batches:
        logger.info("%d batch(es) had an under-filled class and passed through unmixed", unmixed_batches)

    return TrainReport(
        config=config,
        classifier=clf,
        epoch_losses=epoch_losses,
        natural=natural,
        adversarial=adversarial,
        n_train=n,
        n_holdout=len(holdout),
        unmixed_batches=unmixed_batches,
        metadata={"data_seed": data.seed, "d": data.params.d, "params": data.params.to_dict()},
    )

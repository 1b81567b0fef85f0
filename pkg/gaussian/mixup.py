# gaussian/mixup.py
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .errors import InsufficientPairsError, ParameterError
from .sampler import class_block, class_stream
from .types import (
    LABELS,
    PAIR_STREAM,
    UNIFORM_LAMBDA_STREAM,
    Dataset,
    MixupSpec,
    ModelParams,
)
from .utils import block_rng, default_block_size, iter_blocks, ordered_map

logger = logging.getLogger(__name__)


def mixup_distribution(params: ModelParams, spec: MixupSpec) -> ModelParams:
    """
    Distribution of same-class mixed samples.

    Means and alpha are unchanged; both standard deviations shrink by sqrt(g(lambda)).
    Raises UnsupportedRegimeError for a uniform lambda, whose mixed samples are
    not Gaussian with a single g.
    """
    scale = math.sqrt(spec.fixed_g())
    if spec.lam in (0.0, 1.0):
        return params
    return params.with_(
        sigma_plus=params.sigma_plus * scale,
        sigma_minus=params.sigma_minus * scale,
    )


@dataclass
class PairPlan:
    """Index pairs (first[k], second[k]) drawn without replacement inside one class each."""
    first: np.ndarray
    second: np.ndarray
    labels: np.ndarray
    lams: np.ndarray
    short_classes: List[int]


def plan_pairs(
    y: np.ndarray,
    spec: MixupSpec,
    seed: int,
    salt: Sequence[int] = (),
    strict: bool = True,
) -> PairPlan:
    """
    Pair samples of the same class.

    Each class's indices are shuffled and consecutive entries are paired, so
    i != j and every sample is used at most once. A present class with a
    single sample raises InsufficientPairsError when strict, otherwise it is
    reported in short_classes and left unpaired.
    """
    y = np.asarray(y)
    firsts, seconds, labels, lams = [], [], [], []
    short: List[int] = []
    for class_index, label in enumerate(LABELS):
        idx = np.flatnonzero(y == label)
        if idx.size == 0:
            continue
        if idx.size < 2:
            if strict:
                raise InsufficientPairsError(label, int(idx.size))
            short.append(label)
            continue
        rng = np.random.default_rng([int(seed), PAIR_STREAM, class_index, *salt])
        perm = rng.permutation(idx)
        m = idx.size // 2
        firsts.append(perm[0:2 * m:2])
        seconds.append(perm[1:2 * m:2])
        labels.append(np.full(m, label, dtype=np.int64))
        if spec.uniform:
            lam_rng = np.random.default_rng([int(seed), UNIFORM_LAMBDA_STREAM, class_index, *salt])
            lams.append(lam_rng.random(m))
        else:
            lams.append(np.full(m, float(spec.lam)))

    def cat(parts, dtype):
        return np.concatenate(parts).astype(dtype) if parts else np.empty(0, dtype=dtype)

    return PairPlan(
        first=cat(firsts, np.int64),
        second=cat(seconds, np.int64),
        labels=cat(labels, np.int64),
        lams=cat(lams, np.float64),
        short_classes=short,
    )


def mix(X: np.ndarray, plan: PairPlan) -> np.ndarray:
    """lam * x_i + (1 - lam) * x_j for every planned pair."""
    lam = plan.lams[:, None]
    return lam * X[plan.first] + (1.0 - lam) * X[plan.second]


def sample_mixup_pairs(data: Dataset, spec: MixupSpec, seed: int) -> Dataset:
    """
    Same-class mixup of a dataset.

    Output has floor(n_c / 2) samples per class c, class +1 first; labels are
    the shared pair label.
    With a uniform lambda the mixed distribution has no closed form, so params
    stays the source distribution and metadata["params_describe"] says so.
    """
    plan = plan_pairs(data.y, spec, seed, strict=True)
    mixed = mix(data.X, plan)
    if spec.uniform:
        params, describes = data.params, "source"
    else:
        params, describes = mixup_distribution(data.params, spec), "mixed"
    logger.debug("mixed %d same-class pairs at lambda=%s", plan.labels.size, spec.lam)
    return Dataset(
        X=mixed,
        y=plan.labels,
        params=params,
        seed=seed,
        metadata={
            "mixup_lambda": spec.lam,
            "uniform_lambda": spec.uniform,
            "params_describe": describes,
            "source_seed": data.seed,
        },
    )


def mixed_class_block(
    params: ModelParams,
    spec: MixupSpec,
    label: int,
    seed: int,
    block: int,
    length: int,
) -> np.ndarray:
    """
    One block of mixed samples of a class: lam * x_i + (1 - lam) * x_j with
    x_i and x_j drawn from independent streams (so i != j).

    With spec.lam in {0, 1} the base draw is returned unmixed.
    """
    first = class_block(params, label, seed, 0, block, length)
    if spec.lam in (0.0, 1.0) and not spec.uniform:
        return first
    second = class_block(params, label, seed, 1, block, length)
    if spec.uniform:
        lam = block_rng(seed, class_stream(label, 2), block).random(length)[:, None]
    else:
        lam = spec.lam
    return lam * first + (1.0 - lam) * second


def sample_mixed_class(
    params: ModelParams,
    spec: MixupSpec,
    label: int,
    n: int,
    seed: int,
    block_size: Optional[int] = None,
    workers: int = 1,
) -> np.ndarray:
    """Draw n mixed samples of one class."""
    if label not in LABELS:
        raise ParameterError(f"label must be -1 or +1, got {label!r}")
    if n < 1:
        raise ParameterError(f"n must be a positive integer, got {n!r}")
    block_size = block_size or default_block_size()
    blocks = list(iter_blocks(n, block_size))
    parts = ordered_map(lambda b: mixed_class_block(params, spec, label, seed, b[0], b[1]), blocks, workers)
    return np.concatenate(parts, axis=0)

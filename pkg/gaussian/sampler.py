# gaussian/sampler.py
import logging
from typing import Optional, Tuple

import numpy as np

from .errors import ParameterError
from .types import (
    CLASS_STREAM_BASE,
    FEATURE_STREAM,
    LABEL_STREAM,
    LABELS,
    Dataset,
    ModelParams,
)
from .utils import block_rng, default_block_size, iter_blocks, ordered_map

logger = logging.getLogger(__name__)


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise ParameterError(f"n must be a positive integer, got {n!r}")


def _labeled_block(params: ModelParams, seed: int, block: int, length: int) -> Tuple[np.ndarray, np.ndarray]:
    u = block_rng(seed, LABEL_STREAM, block).random(length)
    z = block_rng(seed, FEATURE_STREAM, block).standard_normal((length, params.d))
    y = np.where(u < params.alpha, 1, -1).astype(np.int64)
    plus = (y == 1)[:, None]
    X = np.where(
        plus,
        params.mu_plus + params.sigma_plus * z,
        -params.mu_minus + params.sigma_minus * z,
    )
    return X, y


def sample_labeled(
    params: ModelParams,
    n: int,
    seed: int,
    block_size: Optional[int] = None,
    workers: int = 1,
) -> Dataset:
    """
    Draw n i.i.d. labelled samples from the class-conditional Gaussian model.

    Each block of block_size samples has its own generator keyed by
    (seed, block index), so the result does not depend on `workers`.
    """
    _check_n(n)
    block_size = block_size or default_block_size()
    blocks = list(iter_blocks(n, block_size))
    parts = ordered_map(lambda b: _labeled_block(params, seed, b[0], b[1]), blocks, workers)
    X = np.concatenate([p[0] for p in parts], axis=0)
    y = np.concatenate([p[1] for p in parts], axis=0)
    logger.debug("sampled %d points (d=%d) in %d block(s)", n, params.d, len(blocks))
    return Dataset(X=X, y=y, params=params, seed=seed, metadata={"block_size": block_size})


def class_stream(label: int, stream: int = 0) -> int:
    """Stream id for class-conditional draws; label and stream never collide with other streams."""
    return CLASS_STREAM_BASE + 2 * stream + (0 if label == 1 else 1)


def class_block(
    params: ModelParams,
    label: int,
    seed: int,
    stream: int,
    block: int,
    length: int,
) -> np.ndarray:
    """One addressable block of class-conditional samples."""
    z = block_rng(seed, class_stream(label, stream), block).standard_normal((length, params.d))
    return params.mean(label) + params.sigma(label) * z


def sample_class(
    params: ModelParams,
    label: int,
    n: int,
    seed: int,
    stream: int = 0,
    block_size: Optional[int] = None,
    workers: int = 1,
) -> np.ndarray:
    """Draw n feature vectors from a single class (per-class conditional sampling)."""
    if label not in LABELS:
        raise ParameterError(f"label must be -1 or +1, got {label!r}")
    _check_n(n)
    block_size = block_size or default_block_size()
    blocks = list(iter_blocks(n, block_size))
    parts = ordered_map(lambda b: class_block(params, label, seed, stream, b[0], b[1]), blocks, workers)
    return np.concatenate(parts, axis=0)

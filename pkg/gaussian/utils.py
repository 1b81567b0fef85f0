# gaussian/utils.py
import csv
import os
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from .errors import ParameterError

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_BLOCK_SIZE = 65536
NUMBER_FORMAT = ".12g"


def env_int(name: str, default: int) -> int:
    """Read a positive integer from the environment, falling back to default."""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"Environment variable {name} must be an integer, got {raw!r}")
    if value < 1:
        raise ParameterError(f"Environment variable {name} must be >= 1, got {value}")
    return value


def default_workers() -> int:
    return env_int("FAIRMIX_WORKERS", 1)


def default_block_size() -> int:
    return env_int("FAIRMIX_BLOCK_SIZE", DEFAULT_BLOCK_SIZE)


def block_rng(seed: int, stream: int, block: int) -> np.random.Generator:
    """Generator addressed by (seed, stream, block) so any block can be drawn on its own."""
    return np.random.default_rng([int(seed) & 0xFFFFFFFFFFFFFFFF, int(stream), int(block)])


def iter_blocks(n: int, block_size: int) -> Iterator[Tuple[int, int]]:
    """Yield (block_index, block_length) covering n items."""
    if block_size < 1:
        raise ParameterError(f"block_size must be >= 1, got {block_size}")
    for index, start in enumerate(range(0, n, block_size)):
        yield index, min(block_size, n - start)


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """Map fn over items, possibly in threads; results keep input order."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def write_dataset_csv(dataset, path) -> str:
    """Write a dataset as CSV with header x_0,...,x_{d-1},y."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    d = dataset.params.d
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow([f"x_{i}" for i in range(d)] + ["y"])
        for row, label in zip(dataset.X, dataset.y):
            writer.writerow([repr(float(v)) for v in row] + [int(label)])
    return str(path)


def read_dataset_csv(path, params, seed: Optional[int] = 0):
    """Read a CSV written by write_dataset_csv back into a Dataset."""
    from .types import Dataset

    with open(path, "r", newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        header = next(reader)
        expected = [f"x_{i}" for i in range(params.d)] + ["y"]
        if header != expected:
            raise ParameterError(f"Unexpected dataset header in {path}: {header}")
        rows = [row for row in reader if row]
    X = np.array([[float(v) for v in row[:-1]] for row in rows], dtype=np.float64).reshape(-1, params.d)
    y = np.array([int(row[-1]) for row in rows], dtype=np.int64)
    return Dataset(X=X, y=y, params=params, seed=seed)


def format_value(value: Any) -> str:
    """CSV cell text: floats with 12 significant digits, None as an empty cell."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), NUMBER_FORMAT)
    return str(value)


def write_csv_rows(path, columns: Sequence[str], rows: Iterable[Dict[str, Any]]) -> str:
    """Write dict rows under a fixed header ('.' decimals, comma delimiter, LF endings)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(row.get(column)) for column in columns])
    return str(path)

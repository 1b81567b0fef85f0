# classifier/types.py
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from gaussian.errors import ParameterError


@dataclass(eq=False)
class LinearClassifier:
    """
    f(x) = sign(<w, x> + b) with sign(0) = +1.

    A classifier built from a threshold has w = 1 and b = t.
    """
    w: np.ndarray
    b: float

    def __post_init__(self):
        self.w = np.asarray(self.w, dtype=np.float64).reshape(-1)
        self.b = float(self.b)
        if self.w.size < 1:
            raise ParameterError("weight vector must be non-empty")
        if not np.all(np.isfinite(self.w)) or not np.isfinite(self.b):
            raise ParameterError("classifier weights and bias must be finite")

    @property
    def d(self) -> int:
        return int(self.w.size)

    @property
    def is_uniform(self) -> bool:
        return bool(np.all(self.w == self.w[0])) and self.w[0] != 0.0

    @property
    def t(self) -> Optional[float]:
        """b / w for uniform non-zero weights, else None."""
        if not self.is_uniform:
            return None
        return self.b / float(self.w[0])

    @property
    def threshold(self) -> float:
        """b / mean(w): the threshold of the uniform classifier closest in direction."""
        mean = float(np.mean(self.w))
        if mean == 0.0:
            return float("nan")
        return self.b / mean

    def to_dict(self) -> Dict:
        return {"w": [float(v) for v in self.w], "b": self.b}

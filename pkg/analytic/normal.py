# analytic/normal.py
import math
from typing import Union

import numpy as np
from scipy.special import erfc

from gaussian.errors import DomainError

ArrayLike = Union[float, np.ndarray]

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def std_normal_cdf(z: ArrayLike) -> ArrayLike:
    """
    Standard normal CDF, Phi(z) = erfc(-z / sqrt(2)) / 2.

    erfc keeps full relative precision in the lower tail; the upper tail is
    1 minus a tiny number, so absolute error stays near machine epsilon.
    """
    arr = np.asarray(z, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"std_normal_cdf needs finite input, got {z!r}")
    out = 0.5 * erfc(-arr / _SQRT2)
    if np.ndim(z) == 0:
        return float(out)
    return out


def std_normal_pdf(z: ArrayLike) -> ArrayLike:
    arr = np.asarray(z, dtype=np.float64)
    out = _INV_SQRT_2PI * np.exp(-0.5 * arr * arr)
    if np.ndim(z) == 0:
        return float(out)
    return out

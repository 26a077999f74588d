"""
Log-gamma kernel for the entropy formulas.

Every entropy expression in the package reduces to sums of ln Γ(x) with x ≥ 1,
so this module is the only place that touches the gamma function. The
computation is delegated to ``scipy.special.gammaln`` (Cephes ``lgam``),
whose relative error is well below 1e-12 on [0.5, 1e15]; this module adds the
domain checks the raw ufunc does not perform.
"""

import math
from typing import Union

import numpy as np
from scipy.special import gammaln

from omega_entropy.core.errors import DomainError

EULER_GAMMA = 0.5772156649015329

ArrayLike = Union[float, int, np.ndarray, list]


def log_gamma(x: float) -> float:
    """ln Γ(x) for finite x > 0."""
    try:
        value = float(x)
    except (TypeError, ValueError):
        raise DomainError(f"log_gamma needs a real argument, got {x!r}") from None
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"log_gamma is defined for finite x > 0, got {value}")
    return float(gammaln(value))


def log_gamma_array(x: ArrayLike) -> np.ndarray:
    """Elementwise ln Γ(x); every element must be finite and > 0."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.size and (not np.all(np.isfinite(arr)) or np.any(arr <= 0.0)):
        bad = arr[~np.isfinite(arr) | (arr <= 0.0)][0]
        raise DomainError(f"log_gamma is defined for finite x > 0, got {bad}")
    return gammaln(arr)


def log_factorial(n: int) -> float:
    """ln n! for integer n ≥ 0."""
    if int(n) != n or n < 0:
        raise DomainError(f"log_factorial needs a non-negative integer, got {n!r}")
    return log_gamma(int(n) + 1)


def euler_gamma() -> float:
    """Euler-Mascheroni constant γ."""
    return EULER_GAMMA

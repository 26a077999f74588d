"""
Multinomial PMF, statistical weight, and an exhaustive equilibrium oracle.

The oracle enumerates every frequency vector {n_i} with Σ n_i = N, so it is
guarded by the number of compositions C(N+M-1, M-1).
"""

import math
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Generator, Iterator, Optional, Tuple

import numpy as np
from scipy.special import gammaln, xlogy

from omega_entropy.core.config import MAX_ENUMERATION_LIMIT
from omega_entropy.core.distributions import CountVector, ProbDist, make_count_vector
from omega_entropy.core.entropy import omega_entropy_total
from omega_entropy.core.errors import DimensionMismatch, InputError, TooLarge

logger = logging.getLogger(__name__)

# log-PMFs within this relative distance of the maximum count as tied
TIE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class LogWeight:
    """ln Ω of a frequency vector; Ω ≥ 1 so log_omega ≥ 0."""

    log_omega: float

    def __post_init__(self) -> None:
        if self.log_omega < -1e-12:
            raise InputError(f"log statistical weight cannot be negative, got {self.log_omega}")
        object.__setattr__(self, "log_omega", max(float(self.log_omega), 0.0))

    @property
    def omega(self) -> float:
        return math.exp(self.log_omega)


def log_statistical_weight(c: CountVector) -> LogWeight:
    """ln(N! / Π n_i!)."""
    return LogWeight(omega_entropy_total(c))


def multinomial_log_pmf(c: CountVector, p: ProbDist) -> float:
    """ln P({n_i}; N, {p_i}); -inf when some n_i > 0 has p_i = 0."""
    if c.M != p.M:
        raise DimensionMismatch(f"count vector has M={c.M} but distribution has M={p.M}")
    # xlogy(0, 0) == 0 and xlogy(n > 0, 0) == -inf
    return log_statistical_weight(c).log_omega + float(np.sum(xlogy(c.counts, p.probs)))


def count_compositions(N: int, M: int) -> int:
    """Number of frequency vectors of N events over M outcomes."""
    return math.comb(N + M - 1, M - 1)


def _check_enumeration(N: int, M: int, limit: int) -> None:
    if int(N) != N or N < 1:
        raise InputError(f"N must be a positive integer, got {N!r}")
    if int(M) != M or M < 1:
        raise InputError(f"M must be a positive integer, got {M!r}")
    total = count_compositions(int(N), int(M))
    if total > limit:
        raise TooLarge(f"{total} compositions of N={N} into M={M} parts exceed the limit {limit}")
    logger.debug("enumerating %d compositions of N=%d into M=%d", total, N, M)


def _compositions(n: int, m: int) -> Generator[Tuple[int, ...], None, None]:
    if m == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, m - 1):
            yield (first,) + rest


def enumerate_compositions(
    N: int, M: int, limit: int = MAX_ENUMERATION_LIMIT
) -> Iterator[CountVector]:
    """Every {n_i} with Σ n_i = N, once each, starting from [N, 0, …, 0].

    Order is lexicographic on the count tuples, largest first. The guard is
    checked eagerly, before the first item is produced.
    """
    _check_enumeration(N, M, limit)
    return (make_count_vector(t) for t in _compositions(int(N), int(M)))


def composition_matrix(N: int, M: int, limit: int = MAX_ENUMERATION_LIMIT) -> np.ndarray:
    """All compositions as rows of a (count, M) integer array, in enumeration order.

    The array is shared between calls and read-only.
    """
    _check_enumeration(N, M, limit)
    return _cached_rows(int(N), int(M))[0]


@lru_cache(maxsize=64)
def _cached_rows(N: int, M: int) -> Tuple[np.ndarray, np.ndarray]:
    rows = np.array(list(_compositions(N, M)), dtype=np.int64).reshape(-1, M)
    log_omega = gammaln(N + 1.0) - gammaln(rows + 1.0).sum(axis=1)
    rows.flags.writeable = False
    log_omega.flags.writeable = False
    return rows, log_omega


def log_pmf_table(N: int, p: ProbDist, limit: int = MAX_ENUMERATION_LIMIT) -> Tuple[np.ndarray, np.ndarray]:
    """Compositions of N over p's outcomes and their log-PMF values."""
    _check_enumeration(N, p.M, limit)
    rows, log_omega = _cached_rows(int(N), p.M)
    return rows, log_omega + xlogy(rows, p.probs).sum(axis=1)


def brute_force_mode(N: int, p: ProbDist, limit: Optional[int] = None) -> CountVector:
    """The frequency vector of largest probability; the first one enumerated wins ties."""
    rows, log_pmf = log_pmf_table(N, p, MAX_ENUMERATION_LIMIT if limit is None else limit)
    best = float(log_pmf.max())
    # permutations of one count vector tie exactly but differ by rounding in the row sums
    tol = TIE_TOLERANCE * max(1.0, abs(best))
    return make_count_vector(rows[int(np.flatnonzero(log_pmf >= best - tol)[0])])

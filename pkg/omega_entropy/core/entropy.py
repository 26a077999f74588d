"""
Scalar entropy formulas.

H_S is Shannon's entropy -Σ p_i ln p_i. H_Ω is the per-event entropy of a
finite sample, (1/N) ln Ω, where Ω = N! / Π n_i! is the statistical weight of
the frequency vector. At equilibrium (n_i = N p_i) H_Ω is evaluated with a
continuous gamma function, so N p_i does not have to be an integer.

All functions work in nats internally; ``convert`` moves values between nats,
bits (÷ ln 2) and beans per bean (÷ ln M).
"""

import math
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np
from scipy.special import entr

from omega_entropy.core.distributions import CountVector, ProbDist, make_prob_dist
from omega_entropy.core.errors import (
    InputError,
    InvalidM,
    InvalidN,
    InvalidUnit,
    ZeroProbability,
)
from omega_entropy.core.special_fn import euler_gamma, log_gamma, log_gamma_array

logger = logging.getLogger(__name__)

BEANS_TOLERANCE = 1e-12
# float noise allowed below zero before a value is rejected
NEGATIVE_TOLERANCE = 1e-12


class UnitKind(Enum):
    """Entropy unit kind."""
    NATS = "nats"
    BITS = "bits"
    BEANS = "beans"


@dataclass(frozen=True)
class EntropyUnit:
    """Entropy unit; beans per bean carries the alphabet size used as ln M divisor."""

    kind: UnitKind
    M: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is UnitKind.BEANS:
            if self.M is None or int(self.M) != self.M or self.M < 2:
                raise InvalidUnit(f"beans per bean needs an alphabet size M >= 2, got {self.M}")
        elif self.M is not None:
            raise InvalidUnit(f"{self.kind.value} takes no alphabet size")

    @classmethod
    def nats(cls) -> "EntropyUnit":
        return cls(UnitKind.NATS)

    @classmethod
    def bits(cls) -> "EntropyUnit":
        return cls(UnitKind.BITS)

    @classmethod
    def beans(cls, M: int) -> "EntropyUnit":
        return cls(UnitKind.BEANS, M)

    @classmethod
    def parse(cls, name: str, M: Optional[int] = None) -> "EntropyUnit":
        """Build a unit from its CLI name (nats, bits, beans)."""
        try:
            kind = UnitKind(name.lower())
        except ValueError:
            raise InvalidUnit(f"unknown entropy unit {name!r}") from None
        return cls(kind, M if kind is UnitKind.BEANS else None)

    @property
    def divisor(self) -> float:
        """Factor that converts nats into this unit."""
        if self.kind is UnitKind.NATS:
            return 1.0
        if self.kind is UnitKind.BITS:
            return math.log(2)
        return math.log(self.M)

    def __str__(self) -> str:
        if self.kind is UnitKind.BEANS:
            return f"beans/bean (M={self.M})"
        return self.kind.value


@dataclass(frozen=True)
class EntropyValue:
    """A non-negative entropy together with its unit."""

    value: float
    unit: EntropyUnit

    def __post_init__(self) -> None:
        value = float(self.value)
        if not math.isfinite(value):
            raise InputError(f"entropy must be finite, got {value}")
        if value < -NEGATIVE_TOLERANCE:
            raise InputError(f"entropy must be non-negative, got {value}")
        if self.unit.kind is UnitKind.BEANS and value > 1.0 + BEANS_TOLERANCE:
            raise InputError(f"beans per bean entropy cannot exceed 1, got {value}")
        object.__setattr__(self, "value", max(value, 0.0))

    def __float__(self) -> float:
        return self.value


def _nats(value: float) -> EntropyValue:
    return EntropyValue(value, EntropyUnit.nats())


def check_sample_size(N: int) -> int:
    if isinstance(N, bool) or int(N) != N or N < 1:
        raise InvalidN(f"sample size N must be a positive integer, got {N!r}")
    return int(N)


def omega_nats(probs: np.ndarray, n: float) -> float:
    """(1/n)[ln Γ(n+1) - Σ ln Γ(n p_i + 1)] for real n > 0.

    Shared by the equilibrium entropy and by the decomposition identities,
    whose group sample sizes N·P_k are real-valued.
    """
    n = float(n)
    terms = log_gamma_array(n * np.asarray(probs, dtype=np.float64) + 1.0)
    return (log_gamma(n + 1.0) - float(np.sum(terms))) / n


def shannon_entropy(p: ProbDist) -> EntropyValue:
    """H_S = -Σ p_i ln p_i in nats, with 0 ln 0 = 0."""
    return _nats(float(np.sum(entr(p.probs))))


def shannon_uniform(M: int) -> EntropyValue:
    """H_S of the uniform distribution over M outcomes, ln M."""
    if int(M) != M or M < 1:
        raise InvalidM(f"M must be a positive integer, got {M!r}")
    return _nats(math.log(M))


def omega_entropy_total(c: CountVector) -> float:
    """ln Ω of the whole sample (not divided by N)."""
    return log_gamma(c.N + 1) - float(np.sum(log_gamma_array(c.counts + 1.0)))


def omega_entropy_counts(c: CountVector) -> EntropyValue:
    """Per-event H_Ω of an observed frequency vector."""
    return _nats(omega_entropy_total(c) / c.N)


def omega_entropy_equilibrium(p: ProbDist, N: int) -> EntropyValue:
    """Per-event H_Ω at equilibrium n_i = N p_i, continuous in N p_i."""
    N = check_sample_size(N)
    return _nats(omega_nats(p.probs, N))


def omega_entropy_uniform(M: int, N: int) -> EntropyValue:
    """Closed form of H_Ω for p_i = 1/M without materialising M probabilities."""
    if int(M) != M or M < 1:
        raise InvalidM(f"M must be a positive integer, got {M!r}")
    N = check_sample_size(N)
    value = (log_gamma(N + 1) - M * log_gamma(N / M + 1.0)) / N
    return _nats(value)


def convert(e: EntropyValue, target: EntropyUnit) -> EntropyValue:
    """Re-express an entropy in another unit."""
    if e.unit == target:
        return e
    nats = e.value * e.unit.divisor
    return EntropyValue(nats / target.divisor, target)


def entropy_gap_asymptotic(p: ProbDist, N: int) -> float:
    """Large-N estimate of H_S - H_Ω in nats, (1/2N)[(M-1) ln 2πN + Σ ln p_i]."""
    N = check_sample_size(N)
    if np.any(p.probs == 0.0):
        raise ZeroProbability("the asymptotic gap needs every p_i > 0")
    return ((p.M - 1) * math.log(2 * math.pi * N) + float(np.sum(np.log(p.probs)))) / (2 * N)


def omega_entropy_sparse_limit(N: int) -> float:
    """Limit of H_Ω in nats when N p_i → 0 for every outcome: γ + ln Γ(N+1)/N."""
    N = check_sample_size(N)
    return euler_gamma() + log_gamma(N + 1) / N


def normalized_truncated_entropy(p_head: Sequence[float], M: int) -> EntropyValue:
    """Shannon entropy, in beans per bean, of the first M terms renormalised by Z(M)."""
    if int(M) != M or M < 2:
        raise InvalidM(f"M must be an integer >= 2, got {M!r}")
    M = int(M)
    head = np.asarray(p_head, dtype=np.float64)[:M]
    if head.size < M:
        raise InvalidM(f"need at least M={M} leading probabilities, got {head.size}")
    if not np.all(head > 0.0):
        raise InputError("truncated distribution entries must be positive")
    z = math.fsum(head.tolist())
    q = make_prob_dist(head / z)
    bpb = shannon_entropy(q).value / math.log(M)
    return EntropyValue(bpb, EntropyUnit.beans(M))

"""
Validated probability and count vectors, and empirical distributions of byte
or bit streams.
"""

import io
import math
import logging
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Tuple, Union

import numpy as np

from omega_entropy.core.errors import (
    AllZero,
    EmptyDistribution,
    EmptyStream,
    InputError,
    NegativeProbability,
    SourceReadError,
    SumNotOne,
)

logger = logging.getLogger(__name__)

SUM_TOLERANCE = 1e-9
BYTE_ALPHABET = 256
BIT_ALPHABET = 2
DEFAULT_CHUNK_SIZE = 1 << 20

ByteSource = Union[bytes, bytearray, memoryview, BinaryIO]


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ProbDist:
    """Probabilities p_1 … p_M of the M possible outcomes of one event."""

    probs: np.ndarray

    @property
    def M(self) -> int:
        return int(self.probs.size)

    def __len__(self) -> int:
        return self.M

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProbDist):
            return NotImplemented
        return bool(np.array_equal(self.probs, other.probs))

    def tolist(self) -> list:
        return self.probs.tolist()


@dataclass(frozen=True, eq=False)
class CountVector:
    """Observed frequencies n_1 … n_M of a sample of N events."""

    counts: np.ndarray

    @property
    def N(self) -> int:
        return int(self.counts.sum())

    @property
    def M(self) -> int:
        return int(self.counts.size)

    def __len__(self) -> int:
        return self.M

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CountVector):
            return NotImplemented
        return bool(np.array_equal(self.counts, other.counts))

    def __hash__(self) -> int:
        return hash(tuple(self.counts.tolist()))

    def __repr__(self) -> str:
        return f"CountVector({self.counts.tolist()})"

    def tolist(self) -> list:
        return self.counts.tolist()


def make_prob_dist(values: Iterable[float]) -> ProbDist:
    """Validate values as a probability vector; nothing is renormalised."""
    arr = np.array(list(values), dtype=np.float64)
    if arr.size == 0:
        raise EmptyDistribution("a distribution needs at least one outcome")
    if not np.all(arr >= 0.0):
        raise NegativeProbability(f"probabilities must be non-negative, got {arr.min()}")
    total = math.fsum(arr.tolist())
    if not abs(total - 1.0) <= SUM_TOLERANCE:
        raise SumNotOne(f"probabilities sum to {total!r}, not 1")
    return ProbDist(_frozen(arr))


def make_count_vector(counts: Iterable[int]) -> CountVector:
    """Validate non-negative integer frequencies with N = Σ n_i ≥ 1."""
    raw = list(counts)
    if not raw:
        raise EmptyDistribution("a count vector needs at least one outcome")
    if any(int(n) != n for n in raw):
        raise InputError("counts must be integers")
    arr = np.array([int(n) for n in raw], dtype=np.int64)
    if np.any(arr < 0):
        raise InputError("counts must be non-negative")
    if arr.sum() < 1:
        raise InputError("a sample needs at least one event (N >= 1)")
    return CountVector(_frozen(arr))


def normalize(values: Iterable[float]) -> ProbDist:
    """Divide non-negative weights by their sum."""
    arr = np.array(list(values), dtype=np.float64)
    if arr.size == 0:
        raise EmptyDistribution("cannot normalise an empty vector")
    if not np.all(arr >= 0.0):
        raise NegativeProbability("weights must be non-negative")
    total = math.fsum(arr.tolist())
    if total == 0.0:
        raise AllZero("cannot normalise an all-zero vector")
    return make_prob_dist(arr / total)


def to_prob_dist(c: CountVector) -> ProbDist:
    """Empirical distribution p_i = n_i / N."""
    return make_prob_dist(c.counts / c.N)


def compact(c: CountVector) -> CountVector:
    """Drop outcomes that were never observed."""
    return CountVector(_frozen(c.counts[c.counts > 0].copy()))


def counts_from_stream(
    stream: BinaryIO, bits: bool = False, chunk_size: int = DEFAULT_CHUNK_SIZE
) -> CountVector:
    """Count byte (M = 256) or bit (M = 2) outcomes of a binary stream, chunk by chunk."""
    byte_counts = np.zeros(BYTE_ALPHABET, dtype=np.int64)
    total = 0
    try:
        while True:
            chunk = stream.read(chunk_size)
            if not chunk:
                break
            data = np.frombuffer(chunk, dtype=np.uint8)
            byte_counts += np.bincount(data, minlength=BYTE_ALPHABET)
            total += data.size
    except OSError as e:
        raise SourceReadError(f"cannot read input: {e}") from e

    if total == 0:
        raise EmptyStream("input stream is empty")
    logger.debug("read %d bytes", total)

    if not bits:
        return CountVector(_frozen(byte_counts))

    # popcount of every byte value, weighted by how often it occurred
    ones_per_byte = np.unpackbits(np.arange(BYTE_ALPHABET, dtype=np.uint8)[:, None], axis=1).sum(axis=1)
    ones = int(np.dot(byte_counts, ones_per_byte))
    return CountVector(_frozen(np.array([8 * total - ones, ones], dtype=np.int64)))


def _as_stream(source: ByteSource) -> BinaryIO:
    if isinstance(source, (bytes, bytearray, memoryview)):
        return io.BytesIO(bytes(source))
    return source


def empirical_from_bytes(
    stream: ByteSource, chunk_size: int = DEFAULT_CHUNK_SIZE
) -> Tuple[CountVector, ProbDist]:
    """Byte histogram over all 256 outcomes and its empirical distribution."""
    counts = counts_from_stream(_as_stream(stream), bits=False, chunk_size=chunk_size)
    return counts, to_prob_dist(counts)


def empirical_from_bits(
    stream: ByteSource, chunk_size: int = DEFAULT_CHUNK_SIZE
) -> Tuple[CountVector, ProbDist]:
    """Bit histogram [zeros, ones] and its empirical distribution."""
    counts = counts_from_stream(_as_stream(stream), bits=True, chunk_size=chunk_size)
    return counts, to_prob_dist(counts)

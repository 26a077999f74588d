"""
Channel-utilization and protocol-overhead bounds.

For messages of N symbols drawn from {p_i}, H_Ω(p; N) in beans per bean is
the largest fraction of transmitted symbols that can carry payload, and
H_S(p) - H_Ω(p; N) is the smallest achievable protocol overhead. For a
binary source beans per bean are bits per bit.
"""

import math
import logging
from typing import Optional

from omega_entropy.core.distributions import ProbDist
from omega_entropy.core.entropy import (
    EntropyUnit,
    convert,
    omega_entropy_equilibrium,
    shannon_entropy,
)
from omega_entropy.core.errors import InputError, InvalidN
from omega_entropy.core.models import ChannelReport
from omega_entropy.core.special_fn import log_gamma

logger = logging.getLogger(__name__)


def _check_message_size(N: int) -> int:
    if isinstance(N, bool) or int(N) != N or N < 2:
        raise InvalidN(f"message size N must be an integer >= 2, got {N!r}")
    return int(N)


def max_payload_binary(N: int) -> float:
    """Largest payload fraction, in bits per bit, of an N-bit message."""
    N = _check_message_size(N)
    return (log_gamma(N + 1) - 2 * log_gamma(N / 2 + 1)) / (N * math.log(2))


def min_overhead_binary(N: int) -> float:
    """Smallest protocol overhead of an N-bit message from an ideally compressed source."""
    return 1.0 - max_payload_binary(N)


def naive_framing_payload(N: int, ceil_log2: bool = False) -> float:
    """Payload fraction N / (N + log2 N) when the message is prefixed by its length."""
    N = _check_message_size(N)
    prefix = math.ceil(math.log2(N)) if ceil_log2 else math.log2(N)
    return N / (N + prefix)


def real_overhead(header_bits: int, N: int) -> float:
    """Overhead of a fixed header on an N-bit payload, header / (header + N)."""
    N = _check_message_size(N)
    if int(header_bits) != header_bits or header_bits < 0:
        raise InputError(f"header size must be a non-negative integer, got {header_bits!r}")
    return header_bits / (header_bits + N)


def report_unit(M: int) -> Optional[EntropyUnit]:
    """Unit utilization is expressed in: bits for binary sources, beans per bean otherwise."""
    if M < 2:
        return None
    return EntropyUnit.bits() if M == 2 else EntropyUnit.beans(M)


def channel_report(
    p: ProbDist,
    N: int,
    header_bits: Optional[int] = None,
    ceil_log2: bool = False,
) -> ChannelReport:
    """Bounds for messages of N symbols with symbol distribution p."""
    N = _check_message_size(N)
    unit = report_unit(p.M)

    if unit is None:
        # a single-outcome source carries no information
        max_utilization = 0.0
        shannon_utilization = 0.0
        unit_name = "beans"
    else:
        max_utilization = convert(omega_entropy_equilibrium(p, N), unit).value
        shannon_utilization = convert(shannon_entropy(p), unit).value
        unit_name = unit.kind.value

    min_overhead = shannon_utilization - max_utilization
    naive = naive_framing_payload(N, ceil_log2=ceil_log2)

    report = ChannelReport(
        message_bits=N,
        alphabet_size=p.M,
        unit=unit_name,
        max_utilization=max_utilization,
        min_overhead=min_overhead,
        naive_payload_fraction=naive,
        shannon_utilization=shannon_utilization,
        exceeds_naive_framing=max_utilization > naive,
        negative_overhead=min_overhead < 0.0,
    )
    if report.negative_overhead:
        logger.warning(
            "H_Ω exceeds H_S for N=%d (overhead %.3e); reported as computed", N, min_overhead
        )
    if header_bits is not None:
        report.header_bits = int(header_bits)
        report.real_overhead = real_overhead(header_bits, N)
    return report


def binary_channel_report(
    N: int, header_bits: Optional[int] = None, ceil_log2: bool = False
) -> ChannelReport:
    """Bounds for an N-bit message from an ideally compressed source (H_S = 1 bit per bit)."""
    utilization = max_payload_binary(N)
    naive = naive_framing_payload(N, ceil_log2=ceil_log2)
    report = ChannelReport(
        message_bits=N,
        alphabet_size=2,
        unit="bits",
        max_utilization=utilization,
        min_overhead=min_overhead_binary(N),
        naive_payload_fraction=naive,
        shannon_utilization=1.0,
        exceeds_naive_framing=utilization > naive,
        negative_overhead=False,
    )
    if header_bits is not None:
        report.header_bits = int(header_bits)
        report.real_overhead = real_overhead(header_bits, N)
    return report

import sys
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional

import numpy as np
import typer

from omega_entropy.cli.render import emit
from omega_entropy.cli.state import get_state
from omega_entropy.core.channel import channel_report
from omega_entropy.core.config import Config
from omega_entropy.core.distributions import compact, counts_from_stream, to_prob_dist
from omega_entropy.core.entropy import (
    EntropyUnit,
    convert,
    omega_entropy_equilibrium,
    shannon_entropy,
)
from omega_entropy.core.errors import InvalidN, SourceReadError
from omega_entropy.core.models import AnalysisRecord, records_to_dicts

logger = logging.getLogger(__name__)

STDIN = "-"


def _beans(value_nats: float, M: int) -> float:
    if M < 2:
        return 0.0
    return value_nats / EntropyUnit.beans(M).divisor


def analyze_source(
    source: str,
    bits: bool = False,
    compact_alphabet: bool = False,
    unit: str = "bits",
    config: Optional[Config] = None,
) -> AnalysisRecord:
    """Empirical H_S, H_Ω and channel bounds of one file (or stdin for "-")."""
    config = config or Config()
    if source == STDIN:
        counts = counts_from_stream(sys.stdin.buffer, bits=bits, chunk_size=config.CHUNK_SIZE)
    else:
        path = Path(source)
        try:
            with open(path, "rb") as fh:
                counts = counts_from_stream(fh, bits=bits, chunk_size=config.CHUNK_SIZE)
        except OSError as e:
            raise SourceReadError(f"cannot read {source}: {e.strerror or e}") from e

    observed = int(np.count_nonzero(counts.counts))
    if compact_alphabet:
        counts = compact(counts)
    if counts.N < 2:
        raise InvalidN(f"{source}: need at least 2 symbols to bound channel utilization")

    p = to_prob_dist(counts)
    h_s = shannon_entropy(p)
    h_omega = omega_entropy_equilibrium(p, counts.N)
    logger.debug("%s: N=%d M=%d observed=%d", source, counts.N, counts.M, observed)

    bits_unit = EntropyUnit.bits()
    gap_nats = h_s.value - h_omega.value
    if unit == "beans":
        gap = _beans(gap_nats, counts.M)
    else:
        gap = gap_nats / EntropyUnit.parse(unit).divisor

    return AnalysisRecord(
        source=source,
        N=counts.N,
        M=counts.M,
        M_observed=observed,
        H_S_bits=convert(h_s, bits_unit).value,
        H_S_beans=_beans(h_s.value, counts.M),
        H_omega_bits=convert(h_omega, bits_unit).value,
        H_omega_beans=_beans(h_omega.value, counts.M),
        gap=gap,
        unit=unit,
        channel=channel_report(p, counts.N),
    )


def run_analyze(
    ctx: typer.Context,
    sources: List[str],
    bits: bool,
    compact_alphabet: bool,
) -> None:
    state = get_state(ctx)
    config = state.config
    if sources.count(STDIN) > 1:
        raise SourceReadError("stdin can only be read once")

    def analyze_one(source: str) -> AnalysisRecord:
        return analyze_source(source, bits=bits, compact_alphabet=compact_alphabet,
                              unit=state.unit, config=config)

    # map() keeps input order regardless of completion order
    with ThreadPoolExecutor(max_workers=min(config.MAX_WORKERS, len(sources))) as pool:
        records = list(pool.map(analyze_one, sources))

    emit(records_to_dicts(records), state.format, theme_name=config.TABLE_THEME)


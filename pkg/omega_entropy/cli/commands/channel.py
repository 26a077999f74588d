from typing import Optional

import typer

from omega_entropy.cli.commands.converge import parse_probs
from omega_entropy.cli.render import emit
from omega_entropy.cli.state import get_state
from omega_entropy.core.channel import binary_channel_report, channel_report
from omega_entropy.core.errors import InvalidN


def run_channel(
    ctx: typer.Context,
    N: int,
    header_bits: Optional[int],
    ceil_log2: bool,
    probs: Optional[str],
) -> None:
    """Render utilization and overhead bounds for an N-symbol message."""
    state = get_state(ctx)
    if N < 2:
        raise InvalidN(f"message size N must be >= 2, got {N}")
    if probs:
        report = channel_report(parse_probs(probs), N, header_bits=header_bits, ceil_log2=ceil_log2)
    else:
        report = binary_channel_report(N, header_bits=header_bits, ceil_log2=ceil_log2)
    emit(report.to_dict(), state.format, title=f"Channel bounds, N={N}",
         theme_name=state.config.TABLE_THEME)

"""
Convergence of H_Ω to H_S as the sample size grows.
"""

import logging
from typing import List, Optional

import numpy as np
import typer

from omega_entropy.cli.render import emit
from omega_entropy.cli.state import get_state
from omega_entropy.core.distributions import ProbDist, make_prob_dist
from omega_entropy.core.entropy import (
    EntropyUnit,
    entropy_gap_asymptotic,
    omega_entropy_equilibrium,
    shannon_entropy,
)
from omega_entropy.core.errors import DimensionMismatch, InputError, InvalidM, InvalidRange
from omega_entropy.core.models import ConvergeRow, records_to_dicts

logger = logging.getLogger(__name__)

MAX_SAMPLE_SIZE = 10 ** 9


def parse_probs(text: str) -> ProbDist:
    """Parse "0.2,0.8" into a validated distribution."""
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise InputError(f"cannot parse probabilities {text!r}") from None
    return make_prob_dist(values)


def sample_grid(n_min: int, n_max: int, steps: int) -> List[int]:
    """Log-spaced integer sample sizes from n_min to n_max, duplicates removed."""
    if n_min < 1:
        raise InvalidRange(f"n_min must be >= 1, got {n_min}")
    if n_max > MAX_SAMPLE_SIZE:
        raise InvalidRange(f"n_max must be <= {MAX_SAMPLE_SIZE}, got {n_max}")
    if n_min > n_max:
        raise InvalidRange(f"n_min ({n_min}) is larger than n_max ({n_max})")
    if steps < 1:
        raise InvalidRange(f"steps must be >= 1, got {steps}")
    grid = np.rint(np.geomspace(n_min, n_max, steps)).astype(np.int64)
    return [int(n) for n in np.unique(grid)]


def resolve_distribution(M: Optional[int], probs: Optional[str]) -> ProbDist:
    if probs:
        p = parse_probs(probs)
        if M is not None and M != p.M:
            raise DimensionMismatch(f"--m {M} does not match {p.M} probabilities")
        return p
    M = 2 if M is None else M
    if M < 1:
        raise InvalidM(f"M must be >= 1, got {M}")
    return make_prob_dist(np.full(M, 1.0 / M))


def convergence_table(p: ProbDist, grid: List[int], unit: EntropyUnit) -> List[ConvergeRow]:
    """H_Ω, H_S, their gap and the large-N gap estimate at every grid point."""
    divisor = unit.divisor
    h_s = shannon_entropy(p).value
    with_asymptotic = bool(np.all(p.probs > 0.0))
    if not with_asymptotic:
        logger.warning("zero probabilities present; gap_asymptotic column left empty")

    rows = []
    for N in grid:
        h_omega = omega_entropy_equilibrium(p, N).value
        rows.append(ConvergeRow(
            N=N,
            H_omega=h_omega / divisor,
            H_S=h_s / divisor,
            gap=(h_s - h_omega) / divisor,
            gap_asymptotic=entropy_gap_asymptotic(p, N) / divisor if with_asymptotic else None,
        ))
    logger.debug("convergence table with %d rows", len(rows))
    return rows


def run_converge(
    ctx: typer.Context,
    M: Optional[int],
    probs: Optional[str],
    n_min: int,
    n_max: int,
    steps: int,
) -> None:
    state = get_state(ctx)
    grid = sample_grid(n_min, n_max, steps)
    p = resolve_distribution(M, probs)
    unit = EntropyUnit.parse(state.unit, p.M)
    rows = convergence_table(p, grid, unit)
    emit(records_to_dicts(rows), state.format,
         title=f"H_Ω → H_S ({unit}, M={p.M})", theme_name=state.config.TABLE_THEME, tabular=True)

"""
Randomized numerical checks of the exact H_Ω identities and of the
equilibrium claim, runnable from the command line.
"""

import logging
from dataclasses import dataclass, asdict
from typing import Any, Dict, List

import numpy as np
import typer

from omega_entropy.cli.render import emit
from omega_entropy.cli.state import EXIT_DOMAIN_ERROR, get_state
from omega_entropy.core.decomposition import coarse_grain, recursion_residual
from omega_entropy.core.distributions import make_prob_dist
from omega_entropy.core.errors import InvalidRange
from omega_entropy.core.models import records_to_dicts
from omega_entropy.core.multinomial import (
    brute_force_mode,
    count_compositions,
    enumerate_compositions,
)

logger = logging.getLogger(__name__)

IDENTITY_TOLERANCE = 1e-10
SAMPLE_SIZES = (10, 100, 10 ** 4, 10 ** 6)
MAX_ALPHABET = 6


@dataclass
class CheckResult:
    check: str
    cases: int
    max_abs_residual: float
    tolerance: float
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _random_groups(rng: np.random.Generator, M: int) -> List[List[int]]:
    K = int(rng.integers(1, M + 1))
    order = rng.permutation(np.arange(1, M + 1))
    cuts = np.sort(rng.choice(np.arange(1, M), size=K - 1, replace=False)) if K > 1 else []
    return [g.tolist() for g in np.split(order, cuts)]


def check_recursion(rng: np.random.Generator, cases: int) -> CheckResult:
    worst = 0.0
    for _ in range(cases):
        M = int(rng.integers(1, MAX_ALPHABET + 1))
        p = make_prob_dist(rng.dirichlet(np.ones(M)))
        index = int(rng.integers(1, M + 1))
        lam = float(rng.uniform(0.0, 1.0))
        N = int(rng.choice(SAMPLE_SIZES))
        worst = max(worst, abs(recursion_residual(p, index, lam, N)))
    return CheckResult("recursion", cases, worst, IDENTITY_TOLERANCE, worst <= IDENTITY_TOLERANCE)


def check_coarse_grain(rng: np.random.Generator, cases: int) -> CheckResult:
    worst = 0.0
    for _ in range(cases):
        M = int(rng.integers(2, MAX_ALPHABET + 1))
        p = make_prob_dist(rng.dirichlet(np.ones(M)))
        N = int(rng.choice(SAMPLE_SIZES))
        worst = max(worst, abs(coarse_grain(p, _random_groups(rng, M), N).residual))
    return CheckResult("coarse_grain", cases, worst, IDENTITY_TOLERANCE, worst <= IDENTITY_TOLERANCE)


def check_equilibrium_mode(N: int, M: int, limit: int) -> CheckResult:
    """Every p with integral N·p_i must have its multinomial mode at n_i = N·p_i."""
    cases = 0
    worst = 0
    for c in enumerate_compositions(N, M, limit):
        mode = brute_force_mode(N, make_prob_dist(c.counts / N), limit)
        # L1 distance between the discrete mode and the equilibrium counts
        worst = max(worst, int(np.abs(mode.counts - c.counts).sum()))
        cases += 1
    return CheckResult("equilibrium_mode", cases, float(worst), 0.0, worst == 0)


def run_verify(ctx: typer.Context, cases: int, seed: int, mode_n: int, mode_m: int) -> None:
    state = get_state(ctx)
    if cases < 1:
        raise InvalidRange(f"cases must be >= 1, got {cases}")
    if mode_n < 1 or mode_m < 1:
        raise InvalidRange(f"mode check needs N >= 1 and M >= 1, got N={mode_n}, M={mode_m}")
    limit = state.config.ENUMERATION_LIMIT
    logger.debug("mode check over %d compositions", count_compositions(mode_n, mode_m))

    rng = np.random.default_rng(seed)
    results = [
        check_recursion(rng, cases),
        check_coarse_grain(rng, cases),
        check_equilibrium_mode(mode_n, mode_m, limit),
    ]
    emit(records_to_dicts(results), state.format, title="Identity checks",
         theme_name=state.config.TABLE_THEME, tabular=True)

    failed = [r.check for r in results if not r.passed]
    if failed:
        logger.error("checks failed: %s", ", ".join(failed))
        raise typer.Exit(EXIT_DOMAIN_ERROR)

"""
Recursion (splitting one outcome in two) and coarse-graining (grouping
outcomes) identities of the equilibrium entropy H_Ω.

Both identities are exact: the gamma terms cancel algebraically, so the
residuals returned here only measure floating-point noise. Group sample sizes
N_k = N·P_k are kept real-valued.

Outcome indices are 1-based throughout this module, matching how outcomes
are numbered on the command line and in partitions such as {1,2}|{3,4}.
"""

import math
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np

from omega_entropy.core.distributions import ProbDist, make_prob_dist
from omega_entropy.core.entropy import (
    EntropyValue,
    EntropyUnit,
    check_sample_size,
    omega_nats,
)
from omega_entropy.core.errors import (
    IndexOutOfRange,
    InvalidLambda,
    InvalidPartition,
    ZeroGroupMass,
    ZeroProbabilityAtIndex,
)

logger = logging.getLogger(__name__)

Groups = Sequence[Sequence[int]]


@dataclass(frozen=True)
class Partition:
    """K disjoint, non-empty groups of outcome indices covering 1…M."""

    groups: Tuple[Tuple[int, ...], ...]
    masses: Tuple[float, ...]        # P_k
    sample_sizes: Tuple[float, ...]  # N_k = N·P_k
    N: int

    @property
    def K(self) -> int:
        return len(self.groups)

    @property
    def sizes(self) -> Tuple[int, ...]:
        """M_k, the number of outcomes in each group."""
        return tuple(len(g) for g in self.groups)

    @property
    def M(self) -> int:
        return sum(self.sizes)


@dataclass(frozen=True)
class CoarseGrainResult:
    coarse: EntropyValue
    group_terms: List[Tuple[float, EntropyValue]]
    total: EntropyValue
    direct: EntropyValue

    @property
    def residual(self) -> float:
        """total - H_Ω(p; N), evaluated directly."""
        return self.total.value - self.direct.value


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not (0.0 <= lam < 1.0):
        raise InvalidLambda(f"lambda must satisfy 0 <= lambda < 1, got {lam}")
    return lam


def _check_index(p: ProbDist, index: int) -> int:
    if isinstance(index, bool) or int(index) != index or not 1 <= index <= p.M:
        raise IndexOutOfRange(f"outcome index must be in 1..{p.M}, got {index!r}")
    return int(index)


def make_partition(groups: Groups, p: ProbDist, N: int) -> Partition:
    """Validate groups against p's outcomes and derive P_k and N_k."""
    N = check_sample_size(N)
    normalised = tuple(tuple(int(i) for i in g) for g in groups)
    if not normalised:
        raise InvalidPartition("a partition needs at least one group")
    if any(len(g) == 0 for g in normalised):
        raise InvalidPartition("partition groups must be non-empty")
    flat = [i for g in normalised for i in g]
    if len(flat) != len(set(flat)):
        raise InvalidPartition("partition groups must be disjoint")
    if set(flat) != set(range(1, p.M + 1)):
        raise InvalidPartition(f"partition must cover outcomes 1..{p.M} exactly")

    masses = []
    for k, g in enumerate(normalised, start=1):
        mass = math.fsum(p.probs[i - 1] for i in g)
        if mass == 0.0:
            raise ZeroGroupMass(f"group {k} {set(g)} has zero probability mass")
        masses.append(mass)

    return Partition(
        groups=normalised,
        masses=tuple(masses),
        sample_sizes=tuple(N * m for m in masses),
        N=N,
    )


def parse_partition(text: str) -> List[List[int]]:
    """Parse "1,2|3,4" into [[1, 2], [3, 4]]."""
    try:
        return [[int(i) for i in part.split(",") if i.strip()] for part in text.split("|")]
    except ValueError:
        raise InvalidPartition(f"cannot parse partition {text!r}") from None


def split_outcome(p: ProbDist, index: int, lam: float) -> ProbDist:
    """Replace p_index by λ·p_index and append (1-λ)·p_index as outcome M+1."""
    index = _check_index(p, index)
    lam = _check_lambda(lam)
    probs = p.probs.copy()
    mass = probs[index - 1]
    probs[index - 1] = lam * mass
    return make_prob_dist(np.append(probs, (1.0 - lam) * mass))


def recursion_residual(p: ProbDist, index: int, lam: float, N: int) -> float:
    """H_Ω(split) - [H_Ω(p; N) + p_index·H_Ω(λ, 1-λ; N·p_index)], in nats."""
    N = check_sample_size(N)
    index = _check_index(p, index)
    lam = _check_lambda(lam)
    mass = float(p.probs[index - 1])
    if mass == 0.0:
        raise ZeroProbabilityAtIndex(f"outcome {index} has zero probability")

    split = split_outcome(p, index, lam)
    whole = omega_nats(p.probs, N)
    pair = omega_nats(np.array([lam, 1.0 - lam]), N * mass)
    return omega_nats(split.probs, N) - (whole + mass * pair)


def coarse_grain(p: ProbDist, partition: Union[Partition, Groups], N: int) -> CoarseGrainResult:
    """Group-level H_Ω plus mass-weighted within-group H_Ω."""
    N = check_sample_size(N)
    if not isinstance(partition, Partition):
        partition = make_partition(partition, p, N)
    elif partition.M != p.M or partition.N != N:
        raise InvalidPartition("partition was built for a different distribution or sample size")

    nats = EntropyUnit.nats()
    coarse = EntropyValue(omega_nats(np.array(partition.masses), N), nats)

    group_terms = []
    weighted = []
    for group, mass, n_k in zip(partition.groups, partition.masses, partition.sample_sizes):
        q = p.probs[[i - 1 for i in group]] / mass
        term = EntropyValue(omega_nats(q, n_k), nats)
        group_terms.append((mass, term))
        weighted.append(mass * term.value)

    total = EntropyValue(coarse.value + math.fsum(weighted), nats)
    direct = EntropyValue(omega_nats(p.probs, N), nats)
    logger.debug("coarse grain K=%d residual %.3e", partition.K, total.value - direct.value)
    return CoarseGrainResult(coarse=coarse, group_terms=group_terms, total=total, direct=direct)


def recursion_residual_coarse(p: ProbDist, index: int, lam: float, N: int) -> float:
    """The recursion residual computed as a coarse graining of the split distribution.

    Every outcome of p stays a singleton group except the split one, whose two
    halves (index and M+1) form a pair group.
    """
    index = _check_index(p, index)
    if p.probs[index - 1] == 0.0:
        raise ZeroProbabilityAtIndex(f"outcome {index} has zero probability")
    split = split_outcome(p, index, lam)
    groups = [[i] if i != index else [index, p.M + 1] for i in range(1, p.M + 1)]
    # coarse_grain reports total - direct, the opposite sign of recursion_residual
    return -coarse_grain(split, groups, N).residual

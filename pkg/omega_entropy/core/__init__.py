from omega_entropy.core.channel import (
    binary_channel_report,
    channel_report,
    max_payload_binary,
    min_overhead_binary,
    naive_framing_payload,
    real_overhead,
)
from omega_entropy.core.decomposition import (
    Partition,
    coarse_grain,
    make_partition,
    recursion_residual,
    split_outcome,
)
from omega_entropy.core.distributions import (
    CountVector,
    ProbDist,
    empirical_from_bits,
    empirical_from_bytes,
    make_count_vector,
    make_prob_dist,
    normalize,
)
from omega_entropy.core.entropy import (
    EntropyUnit,
    EntropyValue,
    convert,
    entropy_gap_asymptotic,
    normalized_truncated_entropy,
    omega_entropy_counts,
    omega_entropy_equilibrium,
    omega_entropy_sparse_limit,
    omega_entropy_uniform,
    shannon_entropy,
)
from omega_entropy.core.multinomial import (
    LogWeight,
    brute_force_mode,
    enumerate_compositions,
    log_statistical_weight,
    multinomial_log_pmf,
)
from omega_entropy.core.special_fn import euler_gamma, log_gamma

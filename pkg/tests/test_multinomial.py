import math

import numpy as np
import pytest
from scipy.special import logsumexp

from omega_entropy.core.distributions import make_count_vector, make_prob_dist
from omega_entropy.core.errors import DimensionMismatch, InputError, TooLarge
from omega_entropy.core.multinomial import (
    brute_force_mode,
    composition_matrix,
    count_compositions,
    enumerate_compositions,
    log_pmf_table,
    log_statistical_weight,
    multinomial_log_pmf,
)


class TestStatisticalWeight:
    def test_small_weights(self):
        assert log_statistical_weight(make_count_vector([2, 1])).omega == pytest.approx(3.0)
        assert log_statistical_weight(make_count_vector([2, 2])).omega == pytest.approx(6.0)

    def test_single_microstate(self):
        assert log_statistical_weight(make_count_vector([5])).log_omega == pytest.approx(0.0, abs=1e-14)
        assert log_statistical_weight(make_count_vector([0, 4, 0])).log_omega == pytest.approx(0.0, abs=1e-14)

    def test_matches_big_integer_factorials(self):
        rng = np.random.default_rng(170)
        for N in range(1, 171):
            for _ in range(5):
                M = int(rng.integers(1, 7))
                counts = rng.multinomial(N, rng.dirichlet(np.ones(M))).tolist()
                omega = math.factorial(N)
                for n in counts:
                    omega //= math.factorial(n)
                expected = math.log(omega)
                got = log_statistical_weight(make_count_vector(counts)).log_omega
                assert got == pytest.approx(expected, rel=1e-10, abs=1e-12), counts


class TestLogPmf:
    def test_fair_coin(self):
        p = make_prob_dist([0.5, 0.5])
        assert multinomial_log_pmf(make_count_vector([1, 1]), p) == pytest.approx(math.log(0.5))

    def test_impossible_sample(self):
        p = make_prob_dist([0.0, 1.0])
        assert multinomial_log_pmf(make_count_vector([1, 2]), p) == -math.inf
        assert multinomial_log_pmf(make_count_vector([0, 3]), p) == pytest.approx(0.0, abs=1e-15)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            multinomial_log_pmf(make_count_vector([1, 1, 1]), make_prob_dist([0.5, 0.5]))

    def test_matches_binomial(self):
        p = make_prob_dist([0.3, 0.7])
        expected = math.log(math.comb(10, 3) * 0.3 ** 3 * 0.7 ** 7)
        assert multinomial_log_pmf(make_count_vector([3, 7]), p) == pytest.approx(expected, rel=1e-12)


class TestEnumerateCompositions:
    def test_order_and_content(self):
        got = [c.tolist() for c in enumerate_compositions(2, 2)]
        assert got == [[2, 0], [1, 1], [0, 2]]

    def test_three_outcomes(self):
        got = [tuple(c.tolist()) for c in enumerate_compositions(3, 3)]
        assert len(got) == count_compositions(3, 3) == 10
        assert len(set(got)) == 10
        assert got[0] == (3, 0, 0) and got[-1] == (0, 0, 3)
        assert got == sorted(got, reverse=True)

    def test_single_outcome(self):
        assert [c.tolist() for c in enumerate_compositions(4, 1)] == [[4]]

    @pytest.mark.parametrize("N,M", [(0, 2), (3, 0), (-1, 2), (2.5, 2)])
    def test_invalid_arguments(self, N, M):
        with pytest.raises(InputError):
            enumerate_compositions(N, M)

    def test_guard_is_eager(self):
        # C(1000+9, 9) is astronomically larger than the limit
        with pytest.raises(TooLarge):
            enumerate_compositions(1000, 10)

    def test_custom_limit(self):
        with pytest.raises(TooLarge):
            enumerate_compositions(10, 3, limit=65)
        assert sum(1 for _ in enumerate_compositions(10, 3, limit=66)) == 66

    def test_matrix_matches_generator(self):
        rows = composition_matrix(5, 3)
        assert rows.tolist() == [c.tolist() for c in enumerate_compositions(5, 3)]
        assert np.all(rows.sum(axis=1) == 5)

    def test_matrix_is_read_only(self):
        rows = composition_matrix(4, 2)
        with pytest.raises(ValueError):
            rows[0, 0] = 1


class TestBruteForceMode:
    def test_fair_coin(self):
        assert brute_force_mode(4, make_prob_dist([0.5, 0.5])).tolist() == [2, 2]

    def test_tie_goes_to_first_enumerated(self):
        # N=1 over a fair coin: [1, 0] and [0, 1] are equally likely
        assert brute_force_mode(1, make_prob_dist([0.5, 0.5])).tolist() == [1, 0]

    def test_non_integral_equilibrium(self):
        # N·p = [1.5, 3.5]; the discrete mode is reported
        assert brute_force_mode(5, make_prob_dist([0.3, 0.7])).tolist() == [1, 4]

    @pytest.mark.parametrize("M", [3, 4])
    def test_uniform_ties_go_to_first_enumerated(self, M):
        p = make_prob_dist(np.full(M, 1.0 / M))
        for N in range(1, 25):
            q, r = divmod(N, M)
            expected = [q + 1] * r + [q] * (M - r)
            assert brute_force_mode(N, p).tolist() == expected, (N, M)

    def test_limit_respected(self):
        with pytest.raises(TooLarge):
            brute_force_mode(30, make_prob_dist([0.25] * 4), limit=100)

    def test_mode_is_equilibrium_whenever_integral(self):
        for M in range(1, 5):
            for N in range(1, 31):
                for c in enumerate_compositions(N, M):
                    p = make_prob_dist(c.counts / N)
                    assert brute_force_mode(N, p) == c, (N, c)


class TestNormalisation:
    def test_pmf_sums_to_one(self):
        rng = np.random.default_rng(11)
        for M in range(1, 5):
            for N in range(1, 21):
                p = make_prob_dist(rng.dirichlet(np.ones(M)))
                _, log_pmf = log_pmf_table(N, p)
                assert math.exp(logsumexp(log_pmf)) == pytest.approx(1.0, abs=1e-10), (N, M)

    def test_pmf_sums_to_one_with_zero_probability(self):
        p = make_prob_dist([0.0, 0.4, 0.6])
        _, log_pmf = log_pmf_table(12, p)
        assert math.exp(logsumexp(log_pmf)) == pytest.approx(1.0, abs=1e-10)

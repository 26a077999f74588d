import io
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from omega_entropy.core.distributions import (
    compact,
    counts_from_stream,
    empirical_from_bits,
    empirical_from_bytes,
    make_count_vector,
    make_prob_dist,
    normalize,
    to_prob_dist,
)
from omega_entropy.core.entropy import shannon_entropy
from omega_entropy.core.errors import (
    AllZero,
    EmptyDistribution,
    EmptyStream,
    InputError,
    NegativeProbability,
    SourceReadError,
    SumNotOne,
)


class TestMakeProbDist:
    def test_valid(self):
        assert make_prob_dist([0.5, 0.5]).M == 2
        assert make_prob_dist([1.0]).M == 1

    def test_sum_not_one(self):
        with pytest.raises(SumNotOne):
            make_prob_dist([0.5, 0.6])

    def test_negative(self):
        with pytest.raises(NegativeProbability):
            make_prob_dist([1.5, -0.5])

    def test_empty(self):
        with pytest.raises(EmptyDistribution):
            make_prob_dist([])

    def test_not_renormalised(self):
        p = make_prob_dist([0.1, 0.2, 0.7])
        assert p.tolist() == [0.1, 0.2, 0.7]

    def test_zero_probabilities_allowed(self):
        assert make_prob_dist([0.0, 1.0]).M == 2

    def test_decimal_literals_within_tolerance(self):
        assert make_prob_dist([0.1] * 10).M == 10

    def test_immutable(self):
        p = make_prob_dist([0.5, 0.5])
        with pytest.raises(ValueError):
            p.probs[0] = 0.9

    @given(st.lists(st.floats(min_value=-1.0, max_value=2.0, allow_nan=False), min_size=1, max_size=8))
    def test_rejects_exactly_the_invalid_vectors(self, values):
        valid = all(v >= 0 for v in values) and abs(math.fsum(values) - 1.0) <= 1e-9
        if valid:
            assert make_prob_dist(values).M == len(values)
        else:
            with pytest.raises(InputError):
                make_prob_dist(values)

    @given(st.lists(st.floats(min_value=0.0, max_value=1e6, allow_nan=False), min_size=1, max_size=16)
           .filter(lambda v: sum(v) > 0))
    def test_normalized_vectors_always_accepted(self, values):
        assert make_prob_dist(normalize(values).probs).M == len(values)


class TestNormalize:
    def test_simple(self):
        assert normalize([1, 1, 2]).tolist() == [0.25, 0.25, 0.5]

    def test_truncated_geometric_head(self):
        q = normalize([0.5, 0.25])
        np.testing.assert_allclose(q.probs, [2 / 3, 1 / 3], rtol=1e-15)

    def test_all_zero(self):
        with pytest.raises(AllZero):
            normalize([0, 0])

    def test_negative(self):
        with pytest.raises(NegativeProbability):
            normalize([1, -1, 2])


class TestCountVector:
    def test_sum_is_n(self):
        c = make_count_vector([2, 0, 1])
        assert c.N == 3 and c.M == 3

    @pytest.mark.parametrize("bad", [[], [0, 0], [1, -1, 2], [1.5, 0.5]])
    def test_invalid(self, bad):
        with pytest.raises(InputError):
            make_count_vector(bad)

    def test_compact_drops_unobserved(self):
        c = compact(make_count_vector([0, 3, 0, 1]))
        assert c.tolist() == [3, 1]

    def test_to_prob_dist(self):
        assert to_prob_dist(make_count_vector([1, 3])).tolist() == [0.25, 0.75]


class TestEmpiricalFromBytes:
    def test_small_stream(self):
        counts, p = empirical_from_bytes(bytes([0x00, 0x00, 0x01]))
        assert counts.M == 256
        assert counts.counts[0] == 2 and counts.counts[1] == 1
        assert counts.N == 3
        assert p.probs[0] == pytest.approx(2 / 3)

    def test_single_symbol_stream(self):
        counts, p = empirical_from_bytes(b"\xff" * 1024)
        assert counts.counts[255] == 1024
        assert shannon_entropy(p).value == 0.0

    def test_empty_stream(self):
        with pytest.raises(EmptyStream):
            empirical_from_bytes(b"")

    def test_file_object_in_small_chunks(self):
        data = bytes(range(256)) * 3 + b"abc"
        counts, _ = empirical_from_bytes(io.BytesIO(data), chunk_size=7)
        assert counts.N == len(data)
        assert counts.counts[ord("a")] == 4

    @given(st.binary(min_size=1, max_size=2048))
    def test_conservation(self, data):
        counts, p = empirical_from_bytes(data)
        assert counts.N == len(data)
        assert int(counts.counts.sum()) == len(data)
        assert make_prob_dist(p.probs).M == 256

    def test_read_error_wrapped(self):
        class Broken(io.RawIOBase):
            def read(self, size=-1):
                raise OSError("device gone")

        with pytest.raises(SourceReadError):
            counts_from_stream(Broken())


class TestEmpiricalFromBits:
    def test_counts_zeros_and_ones(self):
        counts, p = empirical_from_bits(b"\x0f\xff")
        assert counts.tolist() == [4, 12]
        assert counts.N == 16

    def test_balanced_stream(self):
        counts, p = empirical_from_bits(b"\x0f" * 1500)
        assert counts.N == 12000
        assert p.tolist() == [0.5, 0.5]

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dragonsieve import (
    generate_dci,
    odd_even_parts,
    odd_part_mod4,
    primes_by_trial_division,
    trial_division_factor,
    valuation_oracle,
)

SMALL_PRIMES = [2, 3, 5, 7, 11, 13]


class TestGenerateDci:
    def test_base2_first_16(self):
        assert generate_dci(2, 16).terms == [0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0, 4]

    def test_base3_first_16(self):
        assert generate_dci(3, 16).terms == [0, 0, 1, 0, 0, 1, 0, 0, 2, 0, 0, 1, 0, 0, 1, 0]

    def test_base5_first_16(self):
        assert generate_dci(5, 16).terms == [0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0]

    def test_length_one(self):
        assert generate_dci(2, 1).terms == [0]

    def test_rejects_base_below_2(self):
        with pytest.raises(ValueError):
            generate_dci(1, 10)

    def test_rejects_zero_length(self):
        with pytest.raises(ValueError):
            generate_dci(2, 0)

    def test_one_based_term_access(self):
        seq = generate_dci(2, 16)
        assert seq.term(1) == 0
        assert seq.term(16) == 4
        with pytest.raises(IndexError):
            seq.term(0)
        with pytest.raises(IndexError):
            seq.term(17)

    def test_with_length_reuses_overshoot(self):
        seq = generate_dci(2, 10)
        longer = seq.with_length(16)
        assert longer.terms == generate_dci(2, 16).terms
        shorter = seq.with_length(3)
        assert shorter.terms == [0, 1, 0]

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_copy_structure(self, p):
        # The prefix of length p**j starts with p-1 concatenated copies of the
        # length p**(j-1) prefix.
        terms = generate_dci(p, p**3).terms
        block = terms[: p**2]
        for c in range(p - 1):
            assert terms[c * p**2 : (c + 1) * p**2] == block

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_power_positions(self, p):
        m = p**4
        seq = generate_dci(p, m)
        j = 1
        while p**j <= m:
            assert seq.term(p**j) == j
            j += 1


class TestValuationOracle:
    def test_v2_of_4(self):
        assert valuation_oracle(2, 4) == 2

    def test_one_has_no_factors(self):
        assert valuation_oracle(7, 1) == 0

    def test_162(self):
        assert valuation_oracle(3, 162) == 4

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            valuation_oracle(1, 5)
        with pytest.raises(ValueError):
            valuation_oracle(2, 0)

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_matches_dci(self, p):
        m = 2000
        seq = generate_dci(p, m)
        for n in range(1, m + 1):
            assert seq.term(n) == valuation_oracle(p, n)

    @given(p=st.sampled_from(SMALL_PRIMES), n=st.integers(min_value=1, max_value=10**9))
    @settings(max_examples=200)
    def test_zero_iff_not_divisible(self, p, n):
        assert (valuation_oracle(p, n) > 0) == (n % p == 0)


class TestOddEvenParts:
    def test_12(self):
        parts = odd_even_parts(12)
        assert (parts.even_part, parts.odd_part) == (4, 3)

    def test_first_15_odd_parts(self):
        got = [odd_even_parts(n).odd_part for n in range(1, 16)]
        assert got == [1, 1, 3, 1, 5, 3, 7, 1, 9, 5, 11, 3, 13, 7, 15]

    def test_one(self):
        parts = odd_even_parts(1)
        assert (parts.even_part, parts.odd_part) == (1, 1)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            odd_even_parts(0)

    @given(n=st.integers(min_value=1, max_value=10**12))
    @settings(max_examples=200)
    def test_decomposition_identity(self, n):
        parts = odd_even_parts(n)
        assert parts.even_part * parts.odd_part == n
        assert parts.odd_part % 2 == 1
        assert parts.even_part == 2 ** valuation_oracle(2, n)


class TestOddPartMod4:
    def test_first_15(self):
        got = [odd_part_mod4(n) for n in range(1, 16)]
        assert got == [1, 1, 3, 1, 1, 3, 3, 1, 1, 1, 3, 3, 1, 3, 3]

    def test_powers_of_two(self):
        for j in range(20):
            assert odd_part_mod4(2**j) == 1

    def test_22(self):
        assert odd_part_mod4(22) == 3

    @given(n=st.integers(min_value=1, max_value=10**9))
    @settings(max_examples=100)
    def test_always_1_or_3(self, n):
        assert odd_part_mod4(n) in (1, 3)


class TestTrialDivision:
    def test_primes_below_30(self):
        assert primes_by_trial_division(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_prime_count_below_1000(self):
        assert len(primes_by_trial_division(1000)) == 168

    def test_factor_examples(self):
        assert trial_division_factor(24) == [(2, 3), (3, 1)]
        assert trial_division_factor(97) == [(97, 1)]
        assert trial_division_factor(1) == []

from __future__ import annotations

import math

import pytest

from borelline.digits import (
    ArgumentError,
    DigitExpansion,
    check_digit_lemma,
    digit_class_sums,
    digit_sum,
    expand,
    lucas_binom,
    nonzero_digit_count,
    power_sum,
    power_sum_direct,
    prime_power_base,
    require_prime,
)


def test_expand_roundtrip():
    for p in (2, 3, 5):
        for n in range(200):
            e = expand(n, p)
            assert e.value == n
            assert not e.digits or e.digits[-1] != 0


def test_expand_zero_is_empty():
    assert expand(0, 7).digits == ()
    assert digit_sum(0, 7) == 0
    assert nonzero_digit_count(0, 7) == 0


def test_digit_sum_and_count():
    assert expand(11, 2).digits == (1, 1, 0, 1)
    assert digit_sum(11, 2) == 3
    assert nonzero_digit_count(11, 2) == 3
    assert expand(25, 3).digits == (1, 2, 2)
    assert digit_sum(25, 3) == 5
    assert nonzero_digit_count(25, 3) == 3


def test_digit_expansion_validates():
    with pytest.raises(ArgumentError):
        DigitExpansion(4, (1,))
    with pytest.raises(ArgumentError):
        DigitExpansion(3, (3,))
    with pytest.raises(ArgumentError):
        expand(-1, 3)


def test_require_prime():
    assert require_prime(2) == 2
    assert require_prime(13) == 13
    for bad in (0, 1, 4, 9, 15):
        with pytest.raises(ArgumentError):
            require_prime(bad)


def test_prime_power_base():
    assert prime_power_base(8) == (2, 3)
    assert prime_power_base(9) == (3, 2)
    assert prime_power_base(5) == (5, 1)
    with pytest.raises(ArgumentError):
        prime_power_base(12)
    with pytest.raises(ArgumentError):
        prime_power_base(1)


def test_lucas_binom_examples():
    assert lucas_binom(5, 2, 2) == 0
    assert lucas_binom(7, 3, 2) == 1
    assert lucas_binom(5, 2, 5) == 0
    assert lucas_binom(6, 2, 3) == 0
    assert lucas_binom(4, 2, 3) == 0


def test_lucas_binom_matches_factorials():
    for p in (2, 3, 5):
        for m in range(60):
            for n in range(60):
                assert lucas_binom(m, n, p) == math.comb(m, n) % p


def test_lucas_binom_out_of_range():
    assert lucas_binom(3, 5, 2) == 0
    assert lucas_binom(0, 0, 3) == 1
    with pytest.raises(ArgumentError):
        lucas_binom(-1, 0, 2)
    with pytest.raises(ArgumentError):
        lucas_binom(3, -1, 2)


def test_power_sum_unit_values():
    # over the units the sum is -1 exactly when q - 1 divides k, including 0
    for q in (2, 3, 4, 5, 8, 9):
        p = prime_power_base(q)[0]
        for k in range(3 * (q - 1) + 1):
            expected = (p - 1) % p if k % (q - 1) == 0 else 0
            assert power_sum(q, k, include_zero=False) == expected


def test_power_sum_with_zero_kills_constant():
    for q in (2, 3, 4, 5, 8, 9):
        assert power_sum(q, 0, include_zero=True) == 0
        assert power_sum(q, q - 1, include_zero=True) == power_sum(q, q - 1, False)


def test_power_sum_matches_direct():
    for q in (2, 3, 4, 5, 8, 9):
        for k in range(3 * (q - 1) + 1):
            for include_zero in (False, True):
                assert power_sum(q, k, include_zero) == power_sum_direct(q, k, include_zero)


def test_digit_class_sums():
    assert digit_class_sums(5, 2, 2) == (2, 0)
    assert digit_class_sums(0, 2, 2) == (0, 0)
    assert digit_class_sums(25, 3, 2) == (3, 2)


def test_digit_lemma_example():
    verdict = check_digit_lemma(1, 4, 2, 2)
    assert verdict.all_hold
    assert verdict.monotone
    assert verdict.equality_iff_classes
    assert verdict.count_growth


def test_digit_lemma_strict_growth():
    # m' = 7 has digit sum 3 > 1 = digit sum of m = 1, classes cannot match
    verdict = check_digit_lemma(1, 7, 2, 2)
    assert verdict.all_hold
    assert not verdict.equality
    assert not verdict.classes_match


def test_digit_lemma_full_small_grid():
    for p in (2, 3):
        q = p ** 2
        for m in range(q):
            for m_prime in range(m, q ** 2 + 1, q - 1):
                assert check_digit_lemma(m, m_prime, p, 2).all_hold


def test_digit_lemma_validates_inputs():
    with pytest.raises(ArgumentError):
        check_digit_lemma(4, 4, 2, 2)  # m too large for q - 1 = 3
    with pytest.raises(ArgumentError):
        check_digit_lemma(1, 2, 2, 2)  # not congruent mod q - 1
    with pytest.raises(ArgumentError):
        check_digit_lemma(0, 0, 2, 1)  # r must exceed 1

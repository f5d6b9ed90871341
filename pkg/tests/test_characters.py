from __future__ import annotations

import pytest

from borelline.characters import (
    GaloisTwist,
    NoStablePattern,
    RationalPower,
    TruncatedCharacter,
    Trivial,
    TwistedDigitSum,
    X0Pattern,
    classify_exact,
    extract_pattern,
    f_sequence,
    is_compatible,
    is_trivial_symbolic,
    lucas_criterion,
    nonzero_counts,
    symbolic_from_json,
    symbolic_to_json,
    truncate,
    truncated_from_json,
    truncated_to_json,
)
from borelline.digits import ArgumentError
from borelline.towers import CapabilityError


def test_truncated_character_range_checks():
    TruncatedCharacter(2, (0, 1, 5))
    with pytest.raises(ArgumentError):
        TruncatedCharacter(2, (1,))  # 1 not in [0, 2^1 - 1)
    with pytest.raises(ArgumentError):
        TruncatedCharacter(2, (0, 3))
    with pytest.raises(ArgumentError):
        TruncatedCharacter(4, (0,))


def test_compatibility_verdict():
    # 5 = 2 + 3 is congruent to 2 mod 3, so this tower is coherent
    assert is_compatible(TruncatedCharacter(2, (0, 2, 5)))
    bad = is_compatible(TruncatedCharacter(2, (0, 1, 5)))
    assert not bad
    assert bad.failing_pair == (2, 3)


def test_truncate_rational_powers():
    tc = truncate(RationalPower(1), 2, 3)
    assert tc.residues == (0, 1, 1)
    tc = truncate(RationalPower(-1), 2, 3)
    assert tc.residues == (0, 2, 62)
    assert f_sequence(tc) == (0, 1, 5)
    tc = truncate(RationalPower(5), 3, 2)
    assert tc.residues == (1, 5)


def test_truncate_trivial_and_twisted():
    assert truncate(Trivial(), 5, 2).residues == (0, 0)
    sc = TwistedDigitSum(((1, GaloisTwist.from_position(1, 3)),))
    tc = truncate(sc, 2, 3)
    # level 1 reduces mod 2^1 - 1 = 1, so every residue collapses there
    assert tc.residues == (0, 2, 2)


def test_truncate_rejects_large_digits():
    sc = TwistedDigitSum(((2, GaloisTwist.from_position(0, 3)),))
    with pytest.raises(ArgumentError):
        truncate(sc, 2, 3)
    assert truncate(sc, 3, 3).residues == (0, 2, 2)


def test_galois_twist_validation():
    GaloisTwist((0, 1, 1))
    with pytest.raises(ArgumentError):
        GaloisTwist((0, 2))  # 2 out of range mod 2!
    with pytest.raises(ArgumentError):
        GaloisTwist((0, 1, 2))  # 2 mod 2! = 0 disagrees with 1
    assert GaloisTwist.from_position(5, 3).residues == (0, 1, 5)
    assert GaloisTwist((0, 1, 5)).reduce_to(2).residues == (0, 1)


def test_twisted_digit_sum_validation():
    with pytest.raises(ArgumentError):
        TwistedDigitSum(
            ((1, GaloisTwist((0,))), (1, GaloisTwist((0,))))
        )
    with pytest.raises(ArgumentError):
        TwistedDigitSum(((0, GaloisTwist((0,))),))


def test_is_trivial_symbolic_is_semantic():
    assert is_trivial_symbolic(Trivial())
    assert is_trivial_symbolic(RationalPower(0))
    assert is_trivial_symbolic(TwistedDigitSum(()))
    assert not is_trivial_symbolic(RationalPower(1))


def test_extract_pattern_stable_power():
    tc = truncate(RationalPower(1), 2, 3)
    pattern = extract_pattern(tc)
    assert isinstance(pattern, X0Pattern)
    assert pattern.stabilized_at == 2
    assert pattern.factors == ((1, GaloisTwist((0, 0, 0))),)
    for n in (1, 2, 3):
        assert pattern.residue_at(n) == tc.residue(n)


def test_extract_pattern_growing_digit_sum():
    tc = truncate(RationalPower(-1), 2, 3)
    pattern = extract_pattern(tc)
    assert isinstance(pattern, NoStablePattern)
    assert pattern.break_level == 3
    assert pattern.f_sequence == (0, 1, 5)


def test_extract_pattern_all_zero():
    pattern = extract_pattern(truncate(Trivial(), 2, 3))
    assert isinstance(pattern, X0Pattern)
    assert pattern.factors == ()


def test_extract_pattern_needs_two_levels():
    pattern = extract_pattern(TruncatedCharacter(3, (1,)))
    assert isinstance(pattern, NoStablePattern)
    assert pattern.reason == "single level observed"


def test_extract_pattern_rejects_incompatible():
    with pytest.raises(ArgumentError):
        extract_pattern(TruncatedCharacter(2, (0, 1, 5)))


def test_extract_pattern_twisted_roundtrip():
    sc = TwistedDigitSum(
        ((1, GaloisTwist.from_position(0, 3)), (2, GaloisTwist.from_position(3, 3)))
    )
    tc = truncate(sc, 3, 3)
    pattern = extract_pattern(tc)
    assert isinstance(pattern, X0Pattern)
    got = {(t, w.residues) for t, w in pattern.factors}
    assert got == {(1, (0, 0, 0)), (2, (0, 1, 3))}


def test_extract_pattern_same_parity_twists_break():
    # positions 0 and 2 collide mod 2, so the count cannot settle by level 3
    sc = TwistedDigitSum(
        ((1, GaloisTwist.from_position(0, 3)), (1, GaloisTwist.from_position(2, 3)))
    )
    tc = truncate(sc, 3, 3)
    assert isinstance(extract_pattern(tc), NoStablePattern)


def test_classify_exact_dichotomy():
    for lam in range(-6, 7):
        cls = classify_exact(RationalPower(lam), 2)
        assert cls.bounded == (lam >= 0)


def test_classify_exact_pattern_for_positive_power():
    cls = classify_exact(RationalPower(5), 3)
    assert cls.bounded
    got = {(t, w.residues) for t, w in cls.pattern.factors}
    assert got == {(2, (0, 0, 0)), (1, (0, 1, 1))}


def test_classify_exact_deep_power_reports_level():
    cls = classify_exact(RationalPower(3), 2)
    assert cls.bounded
    assert cls.pattern is not None
    assert cls.pattern.stabilized_at == 3


def test_classify_exact_beyond_cap():
    # 2^6 needs digit position 6 >= 3!, past what level 3 towers resolve
    cls = classify_exact(RationalPower(64), 2, level=3)
    assert cls.bounded
    assert cls.pattern is None
    assert "level" in cls.note


def test_classify_exact_twist_collision_at_cap():
    # distinct at level 4, but both reduce to the identity twist at level 3
    sc = TwistedDigitSum(
        ((1, GaloisTwist.from_position(0, 4)), (1, GaloisTwist.from_position(6, 4)))
    )
    with pytest.raises(CapabilityError):
        classify_exact(sc, 2, level=3)


def test_lucas_criterion_finds_witness():
    tc = truncate(RationalPower(-1), 2, 3)
    hit = lucas_criterion(tc, 1)
    assert hit.found
    assert (hit.s, hit.k) == (2, 2)


def test_lucas_criterion_absent_for_bounded():
    tc = truncate(RationalPower(1), 2, 3)
    hit = lucas_criterion(tc, 2)
    assert not hit.found
    assert hit.s is None


def test_lucas_criterion_validates_r():
    tc = truncate(RationalPower(1), 2, 3)
    with pytest.raises(ArgumentError):
        lucas_criterion(tc, 3)
    with pytest.raises(ArgumentError):
        lucas_criterion(tc, 0)


def test_symbolic_json_roundtrip():
    cases = [
        Trivial(),
        RationalPower(-7),
        TwistedDigitSum(
            ((1, GaloisTwist((0, 0, 0))), (2, GaloisTwist((0, 1, 3))))
        ),
    ]
    for sc in cases:
        assert symbolic_from_json(symbolic_to_json(sc)) == sc


def test_symbolic_json_rejects_garbage():
    with pytest.raises(ArgumentError):
        symbolic_from_json({"kind": "mystery"})
    with pytest.raises(ArgumentError):
        symbolic_from_json({"kind": "rational", "lambda": "five"})
    with pytest.raises(ArgumentError):
        symbolic_from_json([1, 2])


def test_truncated_json_roundtrip():
    tc = truncate(RationalPower(-1), 2, 3)
    assert truncated_from_json(truncated_to_json(tc)) == tc

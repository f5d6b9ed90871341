from __future__ import annotations

import pytest

from borelline.towers import CapabilityError, make_tower


def test_defining_polynomials_are_least():
    t2 = make_tower(2)
    assert t2.defining_polynomial(2) == (1, 1, 1)
    assert t2.defining_polynomial(3) == (1, 1, 0, 0, 0, 0, 1)
    t3 = make_tower(3, levels=2)
    assert t3.defining_polynomial(2) == (2, 1, 1)


def test_orders_and_degrees():
    t = make_tower(2)
    assert [t.order(n) for n in (1, 2, 3)] == [2, 4, 64]
    assert [t.degree(n) for n in (1, 2, 3)] == [1, 2, 6]


def test_level_cap():
    with pytest.raises(CapabilityError):
        make_tower(2, levels=4)


def test_prime_field_scalars():
    t = make_tower(5, levels=1)
    g = t.multiplicative_generator(1)
    assert g == t.scalar(3, 1)
    assert g ** 4 == t.one(1)
    assert g ** 2 != t.one(1)


def test_multiplicative_generator_orders():
    for p, n in ((2, 2), (2, 3), (3, 2)):
        t = make_tower(p, levels=n)
        g = t.multiplicative_generator(n)
        q = t.order(n)
        assert g ** (q - 1) == t.one(n)
        for d in (2, 3, 5, 7):
            if (q - 1) % d == 0:
                assert g ** ((q - 1) // d) != t.one(n)


def test_field_axioms_sampled():
    t = make_tower(3, levels=2)
    elems = list(t.enumerate_elements(2))
    assert len(elems) == 9
    for a in elems:
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            for c in elems[:3]:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


def test_subtraction_and_negation():
    t = make_tower(2)
    for a in t.enumerate_elements(2):
        assert a - a == t.zero(2)
        assert a + (-a) == t.zero(2)


def test_inverse_and_division():
    t = make_tower(3, levels=2)
    for a in t.enumerate_elements(2):
        if a.is_zero():
            with pytest.raises(ZeroDivisionError):
                a.inverse()
        else:
            assert a * a.inverse() == t.one(2)


def test_pow_conventions():
    t = make_tower(2)
    z = t.zero(2)
    assert z ** 0 == t.one(2)
    assert z ** 5 == z
    g = t.multiplicative_generator(2)
    assert g ** -1 == g.inverse()
    assert g ** 3 == t.one(2)


def test_cross_level_arithmetic_embeds():
    t = make_tower(2)
    one1 = t.one(1)
    g3 = t.multiplicative_generator(3)
    s = one1 + g3
    assert s.level == 3
    assert s - g3 == t.one(3)


def test_embedding_is_a_field_map():
    t = make_tower(3, levels=2)
    for a in t.enumerate_elements(1):
        for b in t.enumerate_elements(1):
            assert (a + b).embed(2) == a.embed(2) + b.embed(2)
            assert (a * b).embed(2) == a.embed(2) * b.embed(2)


def test_embeddings_compose():
    t = make_tower(2)
    for a in t.enumerate_elements(1):
        assert a.embed(3) == a.embed(2).embed(3)


def test_frobenius_fixes_subfields():
    t = make_tower(2)
    for a in t.enumerate_elements(2):
        up = a.embed(3)
        assert up.frobenius(2) == up
    g = t.multiplicative_generator(3)
    assert g.frobenius(2) != g
    assert g.frobenius(6) == g


def test_frobenius_is_additive_and_multiplicative():
    t = make_tower(3, levels=2)
    for a in t.enumerate_elements(2):
        for b in t.enumerate_elements(2):
            assert (a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1)
            assert (a * b).frobenius(1) == a.frobenius(1) * b.frobenius(1)
        assert a.frobenius(1) == a ** 3


def test_enumerate_is_complete_and_distinct():
    t = make_tower(2)
    elems = list(t.enumerate_elements(3))
    assert len(elems) == 64
    assert len(set(elems)) == 64


def test_standard_basis_spans():
    t = make_tower(2)
    basis = t.standard_basis(2)
    assert len(basis) == 2
    spans = set()
    for c0 in (0, 1):
        for c1 in (0, 1):
            v = t.zero(2)
            if c0:
                v = v + basis[0]
            if c1:
                v = v + basis[1]
            spans.add(v)
    assert len(spans) == 4


def test_scalar_reduces_mod_p():
    t = make_tower(3, levels=1)
    assert t.scalar(0, 1).is_zero()
    assert t.scalar(2, 1) + t.one(1) == t.zero(1)
    assert t.scalar(3, 1).is_zero()
    assert t.scalar(-1, 1) == t.scalar(2, 1)

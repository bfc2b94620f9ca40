"""Base arithmetic: prime fields, dense polynomials, canonical fractions."""

import random

import pytest

from diffext.scalars import (
    DensePoly,
    PrimeField,
    RatFunc,
    RationalFunctionField,
    poly_gcd,
    random_poly,
    random_ratfunc,
    ratfunc_canonical,
)

F2 = PrimeField(2)
F3 = PrimeField(3)


def P(field, *coeffs):
    return DensePoly(field, coeffs)


def test_prime_field_validation():
    PrimeField(65521)  # largest prime below 2**16
    with pytest.raises(ValueError):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(1)
    with pytest.raises(ValueError):
        PrimeField((1 << 16) + 1)


def test_prime_field_inverse():
    for p in (2, 3, 5, 7):
        F = PrimeField(p)
        for a in range(1, p):
            assert F.mul(a, F.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        F3.inv(0)


def test_poly_normalization_trims_leading_zeros():
    assert P(F2, 1, 1, 0, 0).coeffs == (1, 1)
    assert P(F2, 0).coeffs == ()
    assert P(F3, 3, 1).coeffs == (0, 1)
    assert P(F2, 1).degree() == 0
    assert DensePoly.zero(F2).degree() == -1


def test_poly_divmod_exact():
    # (x^2 + x) = x * (x + 1) over F_2, remainder 0.
    q, r = divmod(P(F2, 0, 1, 1), P(F2, 0, 1))
    assert q == P(F2, 1, 1)
    assert not r
    # Generic case keeps the division identity.
    g = P(F3, 1, 2, 0, 1)
    f = P(F3, 2, 1)
    q, r = divmod(g, f)
    assert q * f + r == g
    assert r.degree() < f.degree()


def test_poly_gcd_frozen_values():
    # gcd(x^2 + x, x) = x over F_2.
    g = poly_gcd(P(F2, 0, 1, 1), P(F2, 0, 1))
    assert g == P(F2, 0, 1)
    # gcd(x^2 + 1, x + 1) = x + 1 over F_2 (x^2 + 1 = (x + 1)^2).
    g = poly_gcd(P(F2, 1, 0, 1), P(F2, 1, 1))
    assert g == P(F2, 1, 1)
    # One argument zero: monic scaling of the other.
    g = poly_gcd(P(F3, 0, 2), DensePoly.zero(F3))
    assert g == P(F3, 0, 1)
    assert not poly_gcd(DensePoly.zero(F2), DensePoly.zero(F2))


def test_poly_gcd_divides_both():
    rng = random.Random(11)
    for _ in range(300):
        a = random_poly(F3, rng, 5)
        b = random_poly(F3, rng, 5)
        g = poly_gcd(a, b)
        if not g:
            assert not a and not b
            continue
        assert g.is_monic()
        assert not a % g
        assert not b % g


def test_ratfunc_canonical_frozen_values():
    # (x^2 + x)/x reduces to x + 1 over F_2.
    r = ratfunc_canonical(P(F2, 0, 1, 1), P(F2, 0, 1))
    assert r.num == P(F2, 1, 1)
    assert r.den == DensePoly.one(F2)
    # Zero numerator collapses to 0/1 regardless of denominator.
    r = ratfunc_canonical(DensePoly.zero(F2), P(F2, 1, 0, 1))
    assert r.num == DensePoly.zero(F2)
    assert r.den == DensePoly.one(F2)
    # a/a = 1, and the denominator is forced monic.
    a = P(F3, 1, 2)
    assert ratfunc_canonical(a, a) == RatFunc.one(F3)
    r = ratfunc_canonical(P(F3, 1), P(F3, 2))
    assert r.den.is_monic()
    with pytest.raises(ZeroDivisionError):
        ratfunc_canonical(P(F2, 1), DensePoly.zero(F2))


def test_ratfunc_canonical_is_representative_independent():
    rng = random.Random(23)
    K = RationalFunctionField(3)
    for _ in range(200):
        a = random_ratfunc(K, rng, 3)
        s = random_poly(F3, rng, 3, nonzero=True)
        scaled = ratfunc_canonical(a.num * s, a.den * s)
        assert scaled == a
        assert scaled.num.coeffs == a.num.coeffs and scaled.den.coeffs == a.den.coeffs


def test_field_ops_frozen_values():
    K = RationalFunctionField(2)
    x = K.x()
    one = K.one()
    # 1/(x+1) + x/(x+1) = 1 over F_2.
    d = K.poly(1, 1)
    assert one / d + x / d == one
    # x * (1/x) = 1.
    assert x * x.inverse() == one
    # x - x = 0.
    assert x - x == K.zero()
    with pytest.raises(ZeroDivisionError):
        one / K.zero()
    with pytest.raises(ZeroDivisionError):
        K.zero().inverse()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_field_axioms_sampled(p):
    K = RationalFunctionField(p)
    rng = random.Random(1000 + p)
    zero, one = K.zero(), K.one()
    for _ in range(400):
        a = random_ratfunc(K, rng, 4)
        b = random_ratfunc(K, rng, 4)
        c = random_ratfunc(K, rng, 4)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a - a == zero
        if a:
            assert a * a.inverse() == one


def test_ratfunc_pow():
    K = RationalFunctionField(3)
    x = K.x()
    assert x ** 4 == x * x * x * x
    assert x ** 0 == K.one()
    assert x ** -2 == (x * x).inverse()


def test_char_p_frobenius_is_additive():
    for p in (2, 3):
        K = RationalFunctionField(p)
        rng = random.Random(7 * p)
        for _ in range(100):
            a = random_ratfunc(K, rng, 3)
            b = random_ratfunc(K, rng, 3)
            assert (a + b) ** p == a ** p + b ** p


def test_str_forms():
    K = RationalFunctionField(3)
    assert str(K.zero()) == "0"
    assert str(K.poly(1, 2, 1)) == "x^2 + 2*x + 1"
    assert str(K.poly(0, 1) / K.poly(1, 1)) == "x/(x + 1)"
    assert str((K.poly(1, 1) / K.poly(0, 0, 1))) == "(x + 1)/(x^2)"

"""Derivations on F_p(x), constant coordinates, minimal p-polynomials."""

import random

import pytest

from diffext.errors import NotFound, ZeroDerivation
from diffext.scalars import RatFunc, random_ratfunc
from diffext.towers import (
    DerivedField,
    KMatrix,
    MatrixRingAdapter,
    PPolynomial,
    minimal_p_polynomial,
)


def _w(p, coeffs):
    from diffext.scalars import DensePoly, PrimeField

    F = PrimeField(p)
    return RatFunc(DensePoly(F, coeffs), DensePoly.one(F))


K2X = DerivedField(2, _w(2, (0, 1)))   # delta = x d/dx over F_2
K2D = DerivedField(2, _w(2, (1,)))     # delta = d/dx over F_2
K3X = DerivedField(3, _w(3, (0, 1)))   # delta = x d/dx over F_3


def test_zero_derivation_rejected():
    with pytest.raises(ZeroDerivation):
        DerivedField(2, RatFunc.zero(K2X.field))


def test_derivation_frozen_values():
    x = K2X.x()
    # delta = x d/dx: delta(x) = x, delta(x^2) = 2x^2 = 0 over F_2.
    assert K2X.delta(x) == x
    assert not K2X.delta(x * x)
    # Quotient rule: delta(1/x) = -x/x^2 = 1/x over F_2.
    assert K2X.delta(x.inverse()) == x.inverse()
    # delta = d/dx: delta(x^3) = 3x^2 = x^2 over F_2.
    assert K2D.delta(x ** 3) == x * x
    # Constants of F_p vanish.
    assert not K3X.delta(K3X.from_int(2))


def test_leibniz_and_additivity_sampled():
    rng = random.Random(5)
    for K in (K2X, K2D, K3X):
        for _ in range(250):
            a = random_ratfunc(K, rng, 3)
            b = random_ratfunc(K, rng, 3)
            assert K.delta(a + b) == K.delta(a) + K.delta(b)
            assert K.delta(a * b) == K.delta(a) * b + a * K.delta(b)
            if b:
                q = a / b
                assert K.delta(q) == (K.delta(a) * b - a * K.delta(b)) / (b * b)


def test_is_constant_frozen_values():
    x = K2X.x()
    assert K2X.is_constant(x * x)
    assert K2X.is_constant((x * x) / (x * x + K2X.one()))
    assert not K2X.is_constant(x)
    assert K2X.is_constant(K2X.one())


def test_coords_frozen_value():
    # x^3/(x^2+1) over F_2 with delta = d/dx: multiply by v/v to get
    # (x^5 + x^3)/(x^4 + 1); even part 0, odd part (x^4 + x^2)/(x^4 + 1) * x.
    x = K2D.x()
    a = x ** 3 / (x * x + K2D.one())
    c0, c1 = K2D.coords(a)
    assert not c0
    expected = (x ** 4 + x ** 2) / (x ** 4 + K2D.one())
    assert c1 == expected
    assert K2D.is_constant(c1)
    assert c0 + c1 * x == a


def test_coords_roundtrip_sampled():
    rng = random.Random(77)
    for K in (K2X, K3X, K2D):
        x = K.x()
        basis = K.constant_basis()
        for _ in range(200):
            a = random_ratfunc(K, rng, 3)
            cs = K.coords(a)
            assert len(cs) == K.p
            for c in cs:
                assert K.is_constant(c)
            recombined = sum((c * b for c, b in zip(cs, basis)), K.zero())
            assert recombined == a
        # Coordinates of basis vectors are unit vectors.
        for j, b in enumerate(basis):
            cs = K.coords(b)
            assert all((c == K.one()) == (i == j) for i, c in enumerate(cs))


def test_minimal_p_polynomial_frozen_values():
    # delta = x d/dx over F_2: delta^2 = delta, so g = t^2 + t (i.e. t^2 - t).
    g = minimal_p_polynomial(K2X)
    assert g.e == 1
    assert g.coeffs == (K2X.one(),)
    # delta = d/dx over F_2: delta^2 = 0, so g = t^2.
    g = minimal_p_polynomial(K2D)
    assert g.e == 1
    assert g.coeffs == (K2D.zero(),)
    # delta = x d/dx over F_3: delta^3 = delta, so g = t^3 + 2t = t^3 - t.
    g = minimal_p_polynomial(K3X)
    assert g.e == 1
    assert g.coeffs == (K3X.from_int(2),)


def test_minimal_p_polynomial_annihilates_on_samples():
    rng = random.Random(13)
    for K in (K2X, K2D, K3X):
        g = minimal_p_polynomial(K)
        assert g.annihilates(K)
        for _ in range(100):
            a = random_ratfunc(K, rng, 3)
            assert not g.apply_operator(K, a)


def test_minimal_p_polynomial_weirder_derivation():
    # delta = (1/x) d/dx over F_2: delta^2 = (1/x^2) delta with 1/x^2 constant.
    F = K2D.field
    from diffext.scalars import DensePoly

    K = DerivedField(2, RatFunc(DensePoly.one(F), DensePoly.x(F)))
    g = minimal_p_polynomial(K)
    assert g.e == 1
    x = K.x()
    assert g.coeffs == ((x * x).inverse(),)
    assert g.annihilates(K)


def test_minimal_p_polynomial_bound_exhaustion():
    with pytest.raises(NotFound):
        minimal_p_polynomial(K2X, max_e=0)


def test_ppolynomial_str_and_apply():
    g = minimal_p_polynomial(K2X)
    assert str(g) == "t^2 + t"
    x = K2X.x()
    # g(delta)(a) = delta(delta(a)) + delta(a).
    a = x / (x + K2X.one())
    assert g.apply_operator(K2X, a) == K2X.delta(K2X.delta(a)) + K2X.delta(a)


def test_log_derivative():
    x = K2X.x()
    assert K2X.log_derivative(x) == K2X.one()
    # Constants have zero logarithmic derivative.
    assert not K2X.log_derivative(x * x)
    # Homomorphism: dlog(ab) = dlog(a) + dlog(b).
    rng = random.Random(3)
    for _ in range(100):
        a = random_ratfunc(K2X, rng, 3, nonzero=True)
        b = random_ratfunc(K2X, rng, 3, nonzero=True)
        assert K2X.log_derivative(a * b) == K2X.log_derivative(a) + K2X.log_derivative(b)
    with pytest.raises(ZeroDivisionError):
        K2X.log_derivative(K2X.zero())


def test_matrix_adapter_arithmetic():
    A = MatrixRingAdapter(K2D, 2)
    x = K2D.x()
    one, zero = K2D.one(), K2D.zero()
    b = A.of([[zero, x], [one, zero]])
    # b^2 = x * I for this companion-style matrix.
    assert b * b == A.embed(x)
    # Entrywise derivation.
    assert A.delta(b) == A.of([[zero, one], [zero, zero]])
    # Noncommutativity witness.
    c = A.of([[one, zero], [zero, zero]])
    assert b * c != c * b
    # Inversion and failure.
    binv = A.invert(b)
    assert b * binv == A.one()
    assert binv * b == A.one()
    with pytest.raises(ZeroDivisionError):
        A.invert(A.of([[x, x], [x, x]]))


def test_matrix_adapter_coords_roundtrip():
    A = MatrixRingAdapter(K2X, 2)
    rng = random.Random(19)
    basis = A.constant_basis()
    assert len(basis) == A.dim_over_constants == 8
    for _ in range(50):
        m = A.of(
            [[random_ratfunc(K2X, rng, 2) for _ in range(2)] for _ in range(2)]
        )
        cs = A.coords(m)
        assert A.from_coords(cs) == m
        assert all(K2X.is_constant(c) for c in cs)

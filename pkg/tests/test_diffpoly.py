"""Twisted polynomial arithmetic, right division, V-operators."""

import random

import pytest

from diffext.errors import (
    InternalInvariantViolation,
    NonInvertibleLeadingCoefficient,
    NotInner,
)
from diffext.diffpoly import (
    DiffPoly,
    find_inner_constant,
    is_right_invariant,
    p_poly_as_diffpoly,
    substitute,
    v_g,
    v_p_tower,
)
from diffext.scalars import DensePoly, PrimeField, RatFunc, random_ratfunc
from diffext.towers import DerivedField, MatrixRingAdapter, PPolynomial, minimal_p_polynomial


def _w(p, coeffs):
    F = PrimeField(p)
    return RatFunc(DensePoly(F, coeffs), DensePoly.one(F))


K2X = DerivedField(2, _w(2, (0, 1)))   # delta = x d/dx over F_2
K2D = DerivedField(2, _w(2, (1,)))     # delta = d/dx over F_2
K3X = DerivedField(3, _w(3, (0, 1)))   # delta = x d/dx over F_3
K3D = DerivedField(3, _w(3, (1,)))     # delta = d/dx over F_3


def dp(ring, *coeffs):
    return DiffPoly(ring, coeffs)


def random_dp(ring, rng, deg, coeff_deg=2):
    return DiffPoly(
        ring, [random_ratfunc(ring, rng, coeff_deg) for _ in range(deg + 1)]
    )


def test_twisted_product_frozen_values():
    x, one, zero = K2X.x(), K2X.one(), K2X.zero()
    t = DiffPoly.t(K2X)
    xc = DiffPoly.constant(K2X, x)
    # t * x = x*t + delta(x) = x*t + x for delta = x d/dx.
    assert t * xc == dp(K2X, x, x)
    # x * t has no correction term.
    assert xc * t == dp(K2X, zero, x)
    # t * x over delta = d/dx: x*t + 1.
    t2 = DiffPoly.t(K2D)
    assert t2 * DiffPoly.constant(K2D, K2D.x()) == dp(K2D, K2D.one(), K2D.x())
    # Left distributivity over a sum with a constant.
    assert (t + xc) * (t + xc) == t * t + t * xc + xc * t + xc * xc


def test_product_degree_law_over_field():
    rng = random.Random(101)
    for ring in (K2X, K3X):
        for _ in range(150):
            f = random_dp(ring, rng, rng.randrange(4))
            g = random_dp(ring, rng, rng.randrange(4))
            if f and g:
                assert (f * g).degree() == f.degree() + g.degree()


def test_associativity_of_ring_product_sampled():
    rng = random.Random(55)
    for ring in (K2X, K3D):
        for _ in range(60):
            a = random_dp(ring, rng, 2, 1)
            b = random_dp(ring, rng, 2, 1)
            c = random_dp(ring, rng, 2, 1)
            assert (a * b) * c == a * (b * c)


def test_right_division_frozen_value():
    # g = t^3, f = t^2 - x over delta = d/dx, F_2: q = t, r = x*t + 1.
    ring = K2D
    x = ring.x()
    g = dp(ring, ring.zero(), ring.zero(), ring.zero(), ring.one())
    f = dp(ring, -x, ring.zero(), ring.one())
    q, r = g.right_divmod(f)
    assert q == DiffPoly.t(ring)
    assert r == dp(ring, ring.one(), x)
    assert q * f + r == g


def test_right_division_properties_sampled():
    rng = random.Random(77)
    ring = K2X
    for _ in range(250):
        g = random_dp(ring, rng, rng.randrange(6))
        f = random_dp(ring, rng, rng.randrange(3))
        if not f:
            continue
        q, r = g.right_divmod(f)
        assert q * f + r == g
        assert r.degree() < f.degree()
        # Perturbing the quotient breaks the degree bound: uniqueness.
        s = random_dp(ring, rng, 1)
        if s:
            r2 = g - (q + s) * f
            assert r2.degree() >= f.degree()


def test_division_by_zero_and_exactness():
    ring = K2X
    t = DiffPoly.t(ring)
    with pytest.raises(ZeroDivisionError):
        t.right_divmod(DiffPoly.zero(ring))
    # (t - 1) right-divides t^2 - t over x d/dx: t^2 - t = t*(t - 1).
    one = ring.one()
    f = dp(ring, -one, one)
    g = dp(ring, ring.zero(), -one, one)
    q, r = g.right_divmod(f)
    assert not r
    assert q == t


def test_v_p_frozen_values():
    # delta = d/dx over F_2, b = x: V_2(x) = x^2 + 1; V_4(x) = x^4 + 1.
    x = K2D.x()
    assert v_p_tower(K2D, x, 1) == x * x + K2D.one()
    assert v_p_tower(K2D, x, 2) == x ** 4 + K2D.one()
    # delta = x d/dx over F_2: V_2(x) = x^2 + x.
    xx = K2X.x()
    assert v_p_tower(K2X, xx, 1) == xx * xx + xx


def test_v_p_closed_form_commutative_sampled():
    rng = random.Random(202)
    for ring, p in ((K2X, 2), (K2D, 2), (K3X, 3), (K3D, 3)):
        for _ in range(60):
            b = random_ratfunc(ring, rng, 2)
            # V_p(b) = b^p + delta^(p-1)(b) over a commutative base.
            d = b
            for _ in range(p - 1):
                d = ring.delta(d)
            assert v_p_tower(ring, b, 1) == b ** p + d


def test_v_p_matrix_frozen_value():
    # Entrywise d/dx over F_2, b = [[0, x], [1, 0]]: V_2(b) = b^2 + delta(b).
    A = MatrixRingAdapter(K2D, 2)
    x, one, zero = K2D.x(), K2D.one(), K2D.zero()
    b = A.of([[zero, x], [one, zero]])
    v = v_p_tower(A, b, 1)
    assert v == A.of([[x, one], [zero, x]])
    assert v == b * b + A.delta(b)


def test_v_3_matrix_commutator_term():
    # Noncommutative p = 3: V_3(b) = b^3 + delta^2(b) + b*delta(b) - delta(b)*b.
    A = MatrixRingAdapter(K3D, 2)
    rng = random.Random(17)
    for _ in range(30):
        b = A.of([[random_ratfunc(K3D, rng, 1) for _ in range(2)] for _ in range(2)])
        db = A.delta(b)
        expect = b ** 3 + A.delta(db) + b * db - db * b
        assert v_p_tower(A, b, 1) == expect


def test_v_p_tower_matches_iteration_and_matrix_levels():
    A = MatrixRingAdapter(K3X, 2)
    rng = random.Random(23)
    for _ in range(10):
        b = A.of([[random_ratfunc(K3X, rng, 1) for _ in range(2)] for _ in range(2)])
        v1 = v_p_tower(A, b, 1)
        assert v_p_tower(A, b, 2) == v_p_tower(A, v1, 1)


def test_v_g_frozen_values():
    g = minimal_p_polynomial(K2X)  # t^2 + t for x d/dx over F_2
    one, x = K2X.one(), K2X.x()
    # V_g(1) = 1 + delta(1) + 1 = 0: 1 is a logarithmic derivative.
    assert not v_g(K2X, g, one)
    # V_g(x) = x^2 + x + x = x^2.
    assert v_g(K2X, g, x) == x * x
    # V_g(1/x) = 1/x^2 over F_2.
    assert v_g(K2X, g, x.inverse()) == (x * x).inverse()


def test_v_g_additive_sampled():
    rng = random.Random(4)
    for K in (K2X, K3X):
        g = minimal_p_polynomial(K)
        for _ in range(120):
            a = random_ratfunc(K, rng, 2)
            b = random_ratfunc(K, rng, 2)
            assert v_g(K, g, a + b) == v_g(K, g, a) + v_g(K, g, b)


def test_v_g_shift_identity_sampled():
    # g(t - b) = g(t) - V_g(b) as twisted polynomials.
    rng = random.Random(40)
    for K in (K2X, K3X, K2D):
        g = minimal_p_polynomial(K)
        gt = p_poly_as_diffpoly(g, K)
        for _ in range(40):
            b = random_ratfunc(K, rng, 2)
            shifted = substitute(gt, lambda a: a, -b, K.one())
            assert shifted == gt - DiffPoly.constant(K, v_g(K, g, b))


def test_middle_coefficient_violation_detected():
    # A ring that claims characteristic 2 but computes mod 4 breaks the
    # middle-coefficient cancellation in (t - b)^2.
    class Z4:
        def __init__(self, v):
            self.v = v % 4

        def __add__(self, o):
            return Z4(self.v + o.v)

        def __sub__(self, o):
            return Z4(self.v - o.v)

        def __mul__(self, o):
            return Z4(self.v * o.v)

        def __neg__(self):
            return Z4(-self.v)

        def __eq__(self, o):
            return isinstance(o, Z4) and o.v == self.v

        def __bool__(self):
            return self.v != 0

        def __hash__(self):
            return hash(self.v)

    class BrokenRing:
        char = 2
        is_commutative = True

        def zero(self):
            return Z4(0)

        def one(self):
            return Z4(1)

        def delta(self, a):
            return Z4(0)

        def embed(self, c):
            return c

        def __eq__(self, o):
            return isinstance(o, BrokenRing)

    with pytest.raises(InternalInvariantViolation):
        v_p_tower(BrokenRing(), Z4(1), 1)


def test_noninvertible_leading_coefficient():
    A = MatrixRingAdapter(K2X, 2)
    x = K2X.x()
    singular = A.of([[x, x], [x, x]])
    f = DiffPoly(A, (A.one(), singular))
    g = DiffPoly.t(A) * DiffPoly.t(A)
    with pytest.raises(NonInvertibleLeadingCoefficient):
        g.right_divmod(f)


def test_is_right_invariant_frozen_values():
    one, x = K2X.one(), K2X.x()
    # f = t^2 + t + x^2: d = x^2 is a constant, so R*f is two-sided.
    f_assoc = dp(K2X, x * x, one, one)
    assert is_right_invariant(f_assoc)
    # f = t^2 + t + x: d = x is not constant.
    f_non = dp(K2X, x, one, one)
    assert not is_right_invariant(f_non)
    # f = t over d/dx: t*x = x*t + 1 leaves remainder 1.
    assert not is_right_invariant(DiffPoly.t(K2D))


def test_substitute_frozen_value():
    # h = t^2 + t + x, tau = id, c = 1, eps = 1 over x d/dx, F_2:
    # (t+1)^2 = t^2 + 1, so the image is t^2 + t + x again.
    one, x = K2X.one(), K2X.x()
    h = dp(K2X, x, one, one)
    img = substitute(h, lambda a: a, one, one)
    assert img == h
    # Shift by x instead: image is t^2 + t + x^2 + x (not h).
    img2 = substitute(h, lambda a: a, x, one)
    assert img2 == dp(K2X, x * x + x, one, one)


def test_substitute_is_multiplicative_for_valid_shift():
    # For c with V_g(c) = 0 the substitution respects the ring product.
    rng = random.Random(9)
    ring = K2X
    one = ring.one()
    for _ in range(60):
        a = random_dp(ring, rng, 2, 1)
        b = random_dp(ring, rng, 2, 1)
        left = substitute(a * b, lambda z: z, one, one)
        right = substitute(a, lambda z: z, one, one) * substitute(b, lambda z: z, one, one)
        assert left == right


def test_find_inner_constant_commutative_annihilating():
    g = minimal_p_polynomial(K2X)
    assert not find_inner_constant(K2X, g)
    g3 = minimal_p_polynomial(K3X)
    assert not find_inner_constant(K3X, g3)


def test_find_inner_constant_matrix_adapter():
    # Entrywise d/dx over F_2 with g = t^2: delta^2 = 0 = [0, -], so d0 = 0.
    A = MatrixRingAdapter(K2D, 2)
    g = minimal_p_polynomial(K2D)
    assert g.e == 1 and not g.coeffs[0]
    assert not find_inner_constant(A, g)


def test_find_inner_constant_not_inner():
    # g = t^2 does not annihilate x d/dx, and no constant can make an inner
    # derivation nonzero on a commutative ring.
    g = PPolynomial(2, 1, (K2X.zero(),))
    with pytest.raises(NotInner):
        find_inner_constant(K2X, g)

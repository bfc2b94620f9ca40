"""Automorphisms of the quotient algebras.

A descriptor (tau, c, eps) denotes the candidate map

    H(sum d_i t^i) = sum tau(d_i) (eps*t + c)^i,

computed on representatives and reduced mod f.  Such a map is a (unital)
algebra automorphism precisely when two checks pass:

* the commutation constraint  c*tau(z) + eps*delta(tau(z)) = tau(z)*c + tau(delta(z))
  for z in a generating set of the coefficient ring, and
* H(f) = f, so the map descends to the quotient.

For tau = id and eps = 1 over a commutative base, the second check reduces
to V_g(c) = 0, which holds exactly for logarithmic derivatives
c = delta(u)/u.  Those shifts form a subgroup: composing shifts adds the
c values, the identity is c = 0, and each nonidentity shift has order p.

Inner automorphisms by an invertible nuclear element a come out in the same
normal form: conjugation by a equals the descriptor (i_a, a^(-1) delta(a), 1),
which collapses to (id, a^(-1) delta(a), 1) over a commutative base.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .dext import AlgebraElement, ExtAlgebra, _fraction_candidates
from .diffpoly import substitute, v_g
from .errors import ConditionFailed, NotInvertible, NotNuclear, UnsupportedInstance
from .scalars import random_ratfunc

__all__ = [
    "AutoDescriptor",
    "build_auto",
    "apply_auto",
    "auto_order",
    "compose_shift_autos",
    "is_log_derivative",
    "log_derivative_witness",
    "inner_auto",
    "auto_constraints",
    "AutoConstraintReport",
]


@dataclass(frozen=True, eq=False)
class AutoDescriptor:
    """Validated automorphism data: coefficient map tau, shift c, stretch eps."""

    algebra: ExtAlgebra
    tau: Callable
    tau_name: str
    c: object
    eps: object

    def __call__(self, u: AlgebraElement) -> AlgebraElement:
        return apply_auto(self, u)

    def __eq__(self, other):
        return (
            isinstance(other, AutoDescriptor)
            and other.algebra == self.algebra
            and other.tau_name == self.tau_name
            and other.c == self.c
            and other.eps == self.eps
        )

    def __hash__(self):
        return hash((self.tau_name, self.c, self.eps))

    def __repr__(self):
        return "AutoDescriptor(tau=%s, c=%s, eps=%s)" % (self.tau_name, self.c, self.eps)


def build_auto(algebra: ExtAlgebra, tau, c, eps, tau_name: str = "id") -> AutoDescriptor:
    """Validate (tau, c, eps) for the algebra and return the descriptor.

    Raises ConditionFailed("eq1", ...) when the coefficient commutation
    constraint fails on a generator, ConditionFailed("fixes_f", ...) when
    the candidate does not fix the modulus.
    """
    ring = algebra.ring
    # Generators: x spans the coefficient ring over the constants together
    # with products, so checking the ring basis covers everything linear.
    for z in ring.constant_basis():
        tz = tau(z)
        lhs = c * tz + eps * ring.delta(tz)
        rhs = tz * c + tau(ring.delta(z))
        if lhs != rhs:
            raise ConditionFailed(
                "eq1",
                "commutation constraint fails on %s: %s != %s" % (z, lhs, rhs),
            )
    image_f = substitute(algebra.f, tau, c, eps)
    if image_f != algebra.f:
        diff = image_f - algebra.f
        raise ConditionFailed(
            "fixes_f", "candidate moves the modulus by %s" % (diff,)
        )
    return AutoDescriptor(algebra, tau, tau_name, c, eps)


def apply_auto(H: AutoDescriptor, u: AlgebraElement) -> AlgebraElement:
    if u.algebra != H.algebra:
        raise ValueError("element belongs to a different algebra")
    img = substitute(u.rep, H.tau, H.c, H.eps)
    return AlgebraElement(H.algebra, img.mod_right(H.algebra.f))


def auto_order(H: AutoDescriptor, bound: int = 64) -> Optional[int]:
    """Order of H in the automorphism group, or None past the bound.

    Computed honestly by iterating on the basis; identity is order 1.
    """
    basis = H.algebra.basis()
    images = list(basis)
    for k in range(1, bound + 1):
        images = [apply_auto(H, u) for u in images]
        if images == basis:
            return k
    return None


def compose_shift_autos(H1: AutoDescriptor, H2: AutoDescriptor) -> AutoDescriptor:
    """Composition inside the shift family (tau = id, eps = 1): c values add."""
    ring = H1.algebra.ring
    if H1.tau_name != "id" or H2.tau_name != "id":
        raise UnsupportedInstance("composition is implemented for shift descriptors")
    if H1.eps != ring.one() or H2.eps != ring.one():
        raise UnsupportedInstance("composition is implemented for eps = 1")
    if H1.algebra != H2.algebra:
        raise ValueError("descriptors act on different algebras")
    return build_auto(H1.algebra, H1.tau, H1.c + H2.c, H1.eps)


def is_log_derivative(algebra: ExtAlgebra, c) -> bool:
    """Whether c = delta(u)/u for some nonzero u, i.e. V_g(c) = 0."""
    return not v_g(algebra.ring, algebra.g, c)


def log_derivative_witness(algebra: ExtAlgebra, c, bound: int = 6):
    """Bounded search for u with delta(u)/u = c; None when none is found.

    Advisory only: absence of a witness below the bound proves nothing,
    the V_g test is the real criterion.
    """
    K = algebra.base_field
    for u in _fraction_candidates(K, bound):
        if u and K.log_derivative(u) == c:
            return u
    return None


def inner_auto(algebra: ExtAlgebra, a) -> AutoDescriptor:
    """Conjugation u |-> (a^(-1) o u) o a as a descriptor.

    a must be an invertible element of the nucleus; in these quotients the
    nucleus sits inside the coefficient ring, so a is taken as (or reduced
    to) a coefficient.  Raises NotNuclear or NotInvertible accordingly.
    """
    ring = algebra.ring
    if isinstance(a, AlgebraElement):
        if a.algebra != algebra:
            raise ValueError("element belongs to a different algebra")
        if a.rep.degree() > 0:
            # Positive degree puts it outside the coefficient ring; the
            # nucleus of a nonassociative quotient never reaches there.
            if not algebra.is_associative():
                raise NotNuclear("element of positive degree is not nuclear here")
            raise NotNuclear(
                "conjugation by elements outside the coefficient ring is not supported"
            )
        a = a.rep.coeff(0)
    if not a:
        raise NotInvertible("zero is not invertible")
    try:
        a_inv = ring.invert(a)
    except ZeroDivisionError:
        raise NotInvertible("%s has no inverse" % (a,)) from None
    # Over a commutative base every coefficient is nuclear; the adapter
    # needs an honest associator check over basis pairs.
    if not ring.is_commutative:
        a_elem = algebra.scalar(a)
        basis = algebra.basis()
        for u in basis:
            for v in basis:
                if (
                    algebra.associator(a_elem, u, v)
                    or algebra.associator(u, a_elem, v)
                    or algebra.associator(u, v, a_elem)
                ):
                    raise NotNuclear("%s fails an associator test" % (a,))

    c = a_inv * ring.delta(a)
    if ring.is_commutative:
        tau = lambda z: z
        name = "id"
    else:
        tau = lambda z: a_inv * z * a
        name = "conj"
    H = build_auto(algebra, tau, c, ring.one(), tau_name=name)
    # Cross-check the normal form against literal conjugation on the basis.
    ainv_el = algebra.scalar(a_inv)
    a_el = algebra.scalar(a)
    for u in algebra.basis():
        if apply_auto(H, u) != (ainv_el * u) * a_el:
            raise ConditionFailed(
                "fixes_f", "normal form disagrees with conjugation by %s" % (a,)
            )
    return H


@dataclass(frozen=True)
class AutoConstraintReport:
    """What the automorphism group of the instance must look like.

    For the shipped commutative exponent-one instances: tau is forced to be
    the identity (unique p-th roots make the coefficient field rigid over
    its constants), eps is forced to 1 by the commutation constraint, and
    the admissible shifts c are exactly the kernel of V_g, i.e. the
    logarithmic derivatives.  ``contains`` is the membership test for c.
    """

    algebra: ExtAlgebra
    tau_forced: str
    eps_forced: str
    c_condition: str
    facts: tuple

    def contains(self, c) -> bool:
        return is_log_derivative(self.algebra, c)

    def descriptor_valid(self, c) -> bool:
        try:
            build_auto(self.algebra, lambda z: z, c, self.algebra.ring.one())
        except ConditionFailed:
            return False
        return True


def auto_constraints(algebra: ExtAlgebra, rng=None) -> AutoConstraintReport:
    """Derive the constraints pinning down Aut for a commutative instance.

    Raises UnsupportedInstance over the matrix adapter: its automorphisms
    are not classified by these arguments.
    """
    ring = algebra.ring
    if not ring.is_commutative:
        raise UnsupportedInstance("constraint analysis needs a commutative base")
    if algebra.g.e != 1:
        raise UnsupportedInstance("constraint analysis covers exponent-one instances")
    facts = []
    # Frobenius injectivity: y^p = z^p forces y = z, so a coefficient map
    # commuting with p-th powers cannot move x: tau = id.
    rng = rng or random.Random(0)
    p = ring.p
    for _ in range(25):
        y = random_ratfunc(ring, rng, 2)
        z = random_ratfunc(ring, rng, 2)
        if (y - z) ** p != y ** p - z ** p:
            raise ConditionFailed("eq1", "Frobenius additivity failed")
        if y != z and y ** p == z ** p:
            raise ConditionFailed("eq1", "p-th roots are not unique")
    facts.append("p-th roots are unique in K, so tau fixes x and tau = id")
    # eps != 1 breaks the commutation constraint as soon as delta(z) != 0.
    x = ring.x()
    witness = ring.delta(x)
    if witness:
        facts.append("delta(x) != 0 forces eps = 1 in the commutation constraint")
    for eps_int in range(2, p):
        eps = ring.from_int(eps_int)
        try:
            build_auto(algebra, lambda z: z, ring.zero(), eps)
        except ConditionFailed as exc:
            if exc.condition != "eq1":
                raise
        else:
            raise ConditionFailed("eq1", "eps = %d unexpectedly passed" % eps_int)
    facts.append("admissible c form the kernel of V_g (logarithmic derivatives)")
    return AutoConstraintReport(
        algebra=algebra,
        tau_forced="id",
        eps_forced="1",
        c_condition="V_g(c) = 0",
        facts=tuple(facts),
    )

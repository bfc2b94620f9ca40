"""Associators, nuclei, and the center of a quotient (K, delta, d).

Dividing K[t; delta] by g(t) - d gives an algebra that is associative
exactly when d is a constant of delta.  When it is not, the failure is
small and structured: the nucleus collapses to K and the center to F.

Run:  python3 demos/03_nuclei_and_center.py
"""

from diffext import ExtAlgebra, derived_field, minimal_p_polynomial

K = derived_field(2, "x")
x = K.x()
g = minimal_p_polynomial(K)

S = ExtAlgebra(K, g, x)  # d = x, not a constant
A = ExtAlgebra(K, g, x * x)  # d = x^2, a constant: delta(x^2) = 2x^2 = 0

print("modulus with d = x  :", S.f, " associative:", S.is_associative())
print("modulus with d = x^2:", A.f, " associative:", A.is_associative())
print()

t = S.t()
xs = S.scalar(x)
print("in the nonassociative quotient:")
print("t o t          =", t * t)
print("[t, t, t]      =", S.associator(t, t, t))
print("[t, t, x]      =", S.associator(t, t, xs))
print("[x, t, t]      =", S.associator(xs, t, t))
assert S.associator(t, t, t)
print()

for which in ("left", "middle", "right", "full"):
    basis = S.nucleus(which)
    print("%-6s nucleus basis: %s" % (which, ", ".join(str(b) for b in basis)))
print("every slot is K itself: the coefficient field is as associative as it gets")
print()

print("center basis:", ", ".join(str(b) for b in S.center()))
print("the center is the constant field F = F_2(x^2), seen as F * 1")
print()

full = A.nucleus("full")
print("for the associative companion the nucleus is everything:")
print("basis:", ", ".join(str(b) for b in full))
assert len(full) == A.dim

cent = S.centralizer([xs])
print()
print("Cent(x) basis:", ", ".join(str(b) for b in cent))
print("commuting with x already forces you down into K")

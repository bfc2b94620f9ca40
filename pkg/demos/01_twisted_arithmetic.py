"""Arithmetic in K[t; delta]: the commutation rule and right division.

Run:  python3 demos/01_twisted_arithmetic.py
"""

from diffext import DiffPoly, derived_field, parse_diffpoly, parse_field_element

# F_2(x) carrying delta = x d/dx.
K = derived_field(2, "x")
x = K.x()
t = DiffPoly.t(K)

print("the base field is F_2(x) with delta = x d/dx")
print("delta(x)      =", K.delta(x))
print("delta(x + 1)  =", K.delta(x + K.one()))
print("delta(1/x)    =", K.delta(x.inverse()))
print()

# The defining relation: t swaps past a coefficient at the cost of delta.
a = parse_field_element("x^2 + x", K)
left = t * DiffPoly.constant(K, a)
right = DiffPoly.constant(K, a) * t + DiffPoly.constant(K, K.delta(a))
print("t * (x^2 + x)             =", left)
print("(x^2 + x) * t + delta(..) =", right)
assert left == right
print()

# Multiplication is not commutative: compare both orders.
f = parse_diffpoly("t^2 + x*t", K)
g = parse_diffpoly("t + x", K)
print("f       =", f)
print("g       =", g)
print("f * g   =", f * g)
print("g * f   =", g * f)
assert f * g != g * f
print()

# Right division: g = q*f + r with deg r < deg f, coefficients exact.
big = parse_diffpoly("t^5 + x*t^3 + t + 1/(x)", K)
q, r = big.right_divmod(f)
print("dividing", big)
print("by      ", f)
print("q =", q)
print("r =", r)
assert q * f + r == big
assert r.degree() < f.degree()
print()
print("q*f + r reproduces the dividend exactly; no rounding anywhere.")

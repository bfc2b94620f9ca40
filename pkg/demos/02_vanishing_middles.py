"""The p-power collapse: (t - b)^(p^e) keeps only its ends.

Over a field of characteristic p, expanding (t - b)^(p^e) in K[t; delta]
kills every coefficient strictly between t^(p^e) and the constant term.
What survives at the bottom is -V(b), and V has a closed form when the
coefficients commute.

Run:  python3 demos/02_vanishing_middles.py
"""

import random

from diffext import DiffPoly, derived_field, minimal_p_polynomial, v_g, v_p_tower

K = derived_field(3, "x")  # F_3(x), delta = x d/dx
x = K.x()

b = x + K.one()
lin = DiffPoly(K, (-b, K.one()))
cube = lin ** 3
print("(t - (x+1))^3 =", cube)
for i in (1, 2):
    assert not cube.coeff(i)
print("both middle coefficients are exactly zero")
print()

# The constant term is -V_3(b); the closed form is b^3 + delta^2(b).
v = v_p_tower(K, b, 1)
print("V_3(x+1)             =", v)
print("b^3 + delta^2(b)     =", b ** 3 + K.delta(K.delta(b)))
assert v == b ** 3 + K.delta(K.delta(b))
print()

# One level up: (t - b)^9 collapses the same way, V iterates.
nine = lin ** 9
assert all(not nine.coeff(i) for i in range(1, 9))
assert -nine.coeff(0) == v_p_tower(K, b, 2) == v_p_tower(K, v, 1)
print("(t - b)^9 collapses too, and V_9 = V_3 after V_3")
print()

# For the minimal annihilator g of delta, V_g is additive and vanishes
# exactly on logarithmic derivatives.
g = minimal_p_polynomial(K)
print("minimal p-polynomial of delta:", g)
rng = random.Random(2)
for _ in range(5):
    u = K.random_element(rng, 2)
    if not u:
        continue
    c = K.log_derivative(u)
    print("u = %-14s  V_g(delta(u)/u) = %s" % (u, v_g(K, g, c)))
    assert not v_g(K, g, c)
print()
print("V_g(x) =", v_g(K, g, x), " (x is not a log derivative here)")
assert v_g(K, g, x)

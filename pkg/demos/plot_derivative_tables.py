"""
Derivative polynomials of tanh, tan, sech and sec
=================================================

Every derivative of tanh is a polynomial in tanh itself.  The same holds
for tan, and sech/sec pick up one leading factor of the function.
This script prints the first few polynomials and checks one of them
numerically.
"""

import math

from derivpoly import family_poly
from derivpoly.cli import render_plain

# The first few members of each family, in descending powers of z.
for name in ("tanh", "tan", "sech", "sec"):
    print(name)
    for m in range(6):
        print(f"  m={m}: {render_plain(family_poly(name, m).coefficients)}")

# Check: the third derivative of tanh at 0.4, by a central difference of
# the second derivative, against C_3(tanh 0.4).
theta, h = 0.4, 1e-5
c2 = family_poly("tanh", 2).poly
c3 = family_poly("tanh", 3).poly
fd = (c2(math.tanh(theta + h)) - c2(math.tanh(theta - h))) / (2 * h)
print(f"\nd^3/dx^3 tanh at {theta}: {c3(math.tanh(theta)):.10f} (finite difference {fd:.10f})")

# sech picks up a factor: (d/dx)^m sech x = sech x * S_m(tanh x).
s2 = family_poly("sech", 2).poly
x = 0.9
print(f"sech''({x}) = {s2(math.tanh(x)) / math.cosh(x):.12f}")

# Coefficients are exact rationals, so large m poses no rounding problem.
c20 = family_poly("tanh", 20).coefficients
print(f"\nC_20 has degree {len(c20) - 1}, leading coefficient {c20[-1]}")

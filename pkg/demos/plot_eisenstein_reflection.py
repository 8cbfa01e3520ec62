"""
Eisenstein series and the polygamma reflection formula
======================================================

The series e_r(z) = sum over all integers k of (z + k)^-r can be written
as a polynomial in e_1(z) = pi cot(pi z) with rational coefficients.
The same polynomials give the reflection formula for polygamma functions.
"""

import math

from derivpoly import (
    eisenstein_direct,
    eisenstein_expansion,
    eisenstein_tail_bound,
    polygamma,
    reflection_rhs,
)

# Exact expansions for small r.
for r in range(1, 7):
    print(eisenstein_expansion(r))

# Compare with a brute-force symmetric sum at z = 0.3.
z, K = 0.3, 100_000
print(f"\nz = {z}, K = {K}")
for r in range(1, 7):
    series = eisenstein_expansion(r).evaluate(z)
    direct = eisenstein_direct(r, z, K)
    fixed = eisenstein_direct(r, z, K, tail_correction=True)
    print(f"r={r}: expansion {series:.12g}  direct {direct:.12g}  "
          f"bound {eisenstein_tail_bound(r, z, K):.1e}  with tail estimate {fixed:.12g}")

# Reflection: psi_n(z) - (-1)^n psi_n(1 - z) = pi^(n+1) P_n(-cot(pi z)).
print("\nn  lhs                  rhs")
for n in range(5):
    lhs = polygamma(n, z) - (-1) ** n * polygamma(n, 1 - z)
    print(f"{n}  {lhs:<20.14g} {reflection_rhs(n, z):.14g}")

print(f"\ne_2(1/4) = 2 pi^2 = {2 * math.pi ** 2:.12g}; expansion gives "
      f"{eisenstein_expansion(2).evaluate(0.25):.12g}")

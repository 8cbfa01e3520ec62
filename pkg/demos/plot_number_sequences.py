"""
Euler, tangent and Bernoulli numbers from the polynomials
=========================================================

The value of a derivative polynomial at z = 0 is a Maclaurin coefficient
of the underlying function.  For sech these are the Euler numbers, and for
tan the odd ones are the tangent numbers.
"""

from derivpoly import bernoulli, euler_number, family_poly, tangent_number
from derivpoly.combinat import stirling_alternating_sum, stirling_bernoulli_rhs

# Euler numbers two ways: a Bernoulli-number sum, and S_m(0).
print("m   E_m   S_m(0)")
for m in range(0, 13, 2):
    print(f"{m:<3} {str(euler_number(m)):<6} {family_poly('sech', m).poly(0).real_part()}")

# Tangent numbers: T_k = P_{2k-1}(0).
print("\ntangent numbers:", ", ".join(str(tangent_number(k)) for k in range(1, 9)))
print("P_(2k-1)(0):    ", ", ".join(str(family_poly("tan", 2 * k - 1).poly(0).real_part())
                                    for k in range(1, 9)))

# The Stirling numbers hide Bernoulli numbers too:
# sum_k (-1)^k S(m, k) k! / 2^k = 2 (1 - 2^(m+1)) B_(m+1) / (m+1).
print("\nm  alternating Stirling sum  Bernoulli form")
for m in range(8):
    print(f"{m}  {str(stirling_alternating_sum(m)):<24}  {stirling_bernoulli_rhs(m)}")

print("\nB_0..B_12:", ", ".join(str(bernoulli(n)) for n in range(13)))

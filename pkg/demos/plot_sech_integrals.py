"""
Integrals of x^n sech x against oscillating kernels
===================================================

Differentiating  int_0^inf cos(ax)/cosh(x) dx = (pi/2) sech(pi a/2)
with respect to a yields closed forms for the moments with x^n in front.
Here the closed forms are checked against adaptive quadrature.
"""

from derivpoly.quadcheck import (
    QuadConfig,
    check_cos_identity,
    check_exp_identity,
    check_hoffman_integrals,
    check_sin_identity,
)

cfg = QuadConfig(abs_tol=1e-12)

print("cosine kernel")
for n in range(5):
    for a in (0.0, 0.5, 1.0):
        print(" ", check_cos_identity(n, a, cfg).format_line())

# The sine kernel brings in polygamma values at (1 +- ia)/4.
print("\nsine and complex-exponential kernels")
for n, a in [(0, 1.0), (1, 0.5), (3, 0.25)]:
    print(" ", check_sin_identity(n, a, cfg).format_line())
    print(" ", check_exp_identity(n, a, cfg).format_line())

# Whole-line integrals with Fermi-Dirac and Bose-Einstein style denominators.
print("\nwhole-line integrals")
for n, a, kind in [(0, 0.5, "plus"), (2, 1 / 3, "plus"), (1, 0.5, "minus"), (3, 0.7, "minus")]:
    r = check_hoffman_integrals(n, a, cfg, kind=kind)
    print(f"  {r.format_line()}  value={r.rhs.real:.12g}")

"""Derivative polynomials of tanh, coth, tan, cot, sech, csch and sec.

Every family is built from the geometric polynomials

    omega_n(x) = sum_k S(n, k) k! x^k

through an affine substitution, with Gaussian-rational intermediates where
the formula carries ``i``.  The result must come out real; if it does not,
:class:`~derivpoly.errors.ComplexResidue` is raised instead of dropping the
imaginary part.

Conventions (``F_m`` the m-th polynomial of a family, ``D = d/dtheta``):

=========  ====================================  ================
family     defining relation                     ``F_0``
=========  ====================================  ================
tanh/coth  ``D^m tanh = C_m(tanh)``              ``z``
tan        ``D^m tan = P_m(tan)``                ``z``
cot        ``D^m cot = F_m(cot)``                ``z``
sech/csch  ``D^m sech = sech * S_m(tanh)``       ``1``
sec        ``D^m sec = sec * Q_m(tan)``          ``1``
=========  ====================================  ================

:func:`family_next_oracle` produces ``F_{m+1}`` from ``F_m`` by the chain rule
alone and is used to check the explicit constructions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import combinat
from .errors import ComplexResidue
from .exact import (
    I,
    GaussRational,
    Poly,
    i_power,
    poly_add,
    poly_compose_affine,
    poly_derivative,
    poly_mul,
    poly_scale,
)


class PolyFamily(enum.Enum):
    TANH = "tanh"
    COTH = "coth"
    TAN = "tan"
    COT = "cot"
    SECH = "sech"
    CSCH = "csch"
    SEC = "sec"

    @classmethod
    def parse(cls, name) -> "PolyFamily":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            valid = ", ".join(f.value for f in cls)
            raise ValueError(f"unknown family {name!r}; expected one of {valid}") from None

    @property
    def has_prefactor(self) -> bool:
        """True when the m-th derivative is ``f(theta) * F_m(...)`` rather than ``F_m(...)``."""
        return self in (PolyFamily.SECH, PolyFamily.CSCH, PolyFamily.SEC)

    @property
    def expected_degree_offset(self) -> int:
        return 0 if self.has_prefactor else 1


@dataclass(frozen=True)
class FamilyResult:
    family: PolyFamily
    m: int
    poly: Poly

    @property
    def coefficients(self) -> list[Fraction]:
        return self.poly.real_coefficients()


def geometric_poly(n: int) -> Poly:
    """omega_n(x) = sum_{k=0}^n S(n, k) k! x^k."""
    row = combinat.stirling_row(n)
    return Poly(row[k] * factorial(k) for k in range(n + 1))


def general_poly(m: int, a, b) -> Poly:
    """p_m(z; a, b) = sum_k C(m, k) a^(m-k) b^k omega_k(z).

    ``0**0`` is taken as 1, so ``p_m(z; 0, b) = b^m omega_m(z)``.
    """
    a = GaussRational.coerce(a)
    b = GaussRational.coerce(b)
    result = Poly()
    for k in range(m + 1):
        weight = comb(m, k) * (a ** (m - k)) * (b ** k)
        if weight.is_zero():
            continue
        result = poly_add(result, poly_scale(geometric_poly(k), weight))
    return result


def _assert_real(poly: Poly, family: PolyFamily, m: int) -> Poly:
    for j, c in enumerate(poly.coeffs):
        if not c.is_real():
            raise ComplexResidue(
                f"{family.value} polynomial m={m}: coefficient of z^{j} is {c}")
    return poly


def _tanh_poly(m: int) -> Poly:
    if m == 0:
        return Poly([0, 1])
    # (-2)^m (z + 1) omega_m((z - 1)/2)
    inner = poly_compose_affine(geometric_poly(m), Fraction(1, 2), Fraction(-1, 2))
    return poly_scale(poly_mul(Poly([1, 1]), inner), (-2) ** m)


def _tan_poly(m: int) -> Poly:
    if m == 0:
        return Poly([0, 1])
    # -i^(m+1) (-2)^m (i z + 1) omega_m((i z - 1)/2)
    inner = poly_compose_affine(geometric_poly(m), I / 2, Fraction(-1, 2))
    scale = -i_power(m + 1) * (-2) ** m
    return poly_scale(poly_mul(Poly([1, I]), inner), scale)


def _tan_poly_conjugate_form(m: int) -> Poly:
    # i^(m+1) 2^m (1 - i z) omega_m((1 + i z)/(-2))
    if m == 0:
        return Poly([0, 1])
    inner = poly_compose_affine(geometric_poly(m), -I / 2, Fraction(-1, 2))
    return poly_scale(poly_mul(Poly([1, -I]), inner), i_power(m + 1) * 2 ** m)


def _sech_poly(m: int) -> Poly:
    # p_m((1 + z)/(-2); 1, 2)
    return poly_compose_affine(general_poly(m, 1, 2), Fraction(-1, 2), Fraction(-1, 2))


def _sec_poly(m: int) -> Poly:
    # i^m S_m(i z)
    return poly_scale(poly_compose_affine(_sech_poly(m), I, 0), i_power(m))


def _cot_poly(m: int) -> Poly:
    # -P_m(-z)
    return -poly_compose_affine(_tan_poly(m), -1, 0)


_BUILDERS = {
    PolyFamily.TANH: _tanh_poly,
    PolyFamily.COTH: _tanh_poly,
    PolyFamily.TAN: _tan_poly,
    PolyFamily.COT: _cot_poly,
    PolyFamily.SECH: _sech_poly,
    PolyFamily.CSCH: _sech_poly,
    PolyFamily.SEC: _sec_poly,
}


@lru_cache(maxsize=None)
def _family_poly_cached(family: PolyFamily, m: int) -> Poly:
    return _assert_real(_BUILDERS[family](m), family, m)


def family_poly(family, m: int) -> FamilyResult:
    """The m-th derivative polynomial of ``family`` from its explicit formula."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    family = PolyFamily.parse(family)
    return FamilyResult(family, m, _family_poly_cached(family, m))


def tan_poly_conjugate_form(m: int) -> Poly:
    """P_m from the ``(1 - i z) omega_m((1 + i z)/(-2))`` representation.

    Equal to ``family_poly("tan", m).poly``; kept separate so the two
    representations can be compared.
    """
    return _assert_real(_tan_poly_conjugate_form(m), PolyFamily.TAN, m)


def family_next_oracle(family, p: Poly) -> Poly:
    """Differentiate once more by the chain rule.

    With ``F_m`` the family's m-th polynomial, returns ``F_{m+1}``:

    * tanh, coth: ``(1 - z^2) F'``
    * tan:        ``(1 + z^2) F'``
    * cot:        ``-(1 + z^2) F'``
    * sech, csch: ``(1 - z^2) F' - z F``
    * sec:        ``(1 + z^2) F' + z F``
    """
    family = PolyFamily.parse(family)
    dp = poly_derivative(p)
    z = Poly([0, 1])
    if family in (PolyFamily.TANH, PolyFamily.COTH):
        return Poly([1, 0, -1]) * dp
    if family is PolyFamily.TAN:
        return Poly([1, 0, 1]) * dp
    if family is PolyFamily.COT:
        return Poly([-1, 0, -1]) * dp
    if family in (PolyFamily.SECH, PolyFamily.CSCH):
        return Poly([1, 0, -1]) * dp - z * p
    return Poly([1, 0, 1]) * dp + z * p


def family_base(family) -> Poly:
    """F_0 from the defining relation (``D^0`` is the identity)."""
    family = PolyFamily.parse(family)
    return Poly([1]) if family.has_prefactor else Poly([0, 1])


def center_value(family, m: int) -> Fraction:
    """``F_m(0)`` from closed forms, without evaluating the polynomial.

    tanh/coth use ``(-2)^m omega_m(-1/2)``, tan uses the same alternating
    Stirling sum times ``-i^(m+1)``, sech/csch give the Euler numbers and sec
    gives ``i^m E_m``.
    """
    family = PolyFamily.parse(family)
    if m < 0:
        raise ValueError("m must be nonnegative")
    if family in (PolyFamily.SECH, PolyFamily.CSCH):
        return combinat.euler_number(m)
    if family is PolyFamily.SEC:
        return (i_power(m) * combinat.euler_number(m)).real_part()
    if m == 0:
        return Fraction(0)
    alt = combinat.stirling_alternating_sum(m)
    if family in (PolyFamily.TANH, PolyFamily.COTH):
        return (-2) ** m * alt
    tan0 = (-i_power(m + 1) * ((-2) ** m * alt)).real_part()
    if family is PolyFamily.TAN:
        return tan0
    return -tan0

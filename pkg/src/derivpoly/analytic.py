"""Floating-point layer: Eisenstein series, Hurwitz zeta, polygamma,
the polygamma reflection formula and high derivatives of csc/csch.

Exact polynomials from :mod:`derivpoly.polyfamilies` are rounded to double
only at evaluation time.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from . import combinat
from .errors import DomainError, PoleError
from .exact import format_rational, poly_eval_float
from .polyfamilies import PolyFamily, family_poly

POLE_TOL = 1e-12

# Euler-Maclaurin parameters for hurwitz_zeta / digamma.
EM_SHIFT = 15.0
EM_TERMS = 12

_EM_BERNOULLI = [float(combinat.bernoulli(2 * j)) for j in range(EM_TERMS + 1)]


def _check_finite(z, name="argument"):
    if not cmath.isfinite(z):
        raise DomainError(f"{name} must be finite, got {z!r}")


def _near_integer(z: complex) -> bool:
    z = complex(z)
    return abs(z.imag) < POLE_TOL and abs(z.real - round(z.real)) < POLE_TOL


# ---------------------------------------------------------------------------
# Eisenstein series
# ---------------------------------------------------------------------------

def eisenstein_direct(r: int, z, K: int = 100_000, tail_correction: bool = False):
    """Symmetric partial sum ``z^-r + sum_{k=1}^K [(z+k)^-r + (z-k)^-r]``.

    The neglected tail is O(K^(1-r)) for r >= 2 and O(|z|/K) for r = 1,
    where the pairing of ``k`` and ``-k`` is what makes the sum converge.
    See :func:`eisenstein_tail_bound`.  With ``tail_correction`` the
    estimate from :func:`eisenstein_tail_estimate` is added, leaving an
    error of order K^(-r-1).
    """
    if r < 1:
        raise DomainError("r must be a positive integer")
    if K < 1:
        raise DomainError("K must be a positive integer")
    _check_finite(z, "z")
    if _near_integer(z):
        raise PoleError(f"e_r has a pole at the integer nearest {z!r}")
    k = np.arange(K, 0, -1, dtype=float)
    zc = complex(z)
    if zc.imag == 0:
        x = zc.real
        total = float(x ** -r + np.sum((x + k) ** -r + (x - k) ** -r))
    else:
        total = complex(zc ** -r + np.sum((zc + k) ** -r + (zc - k) ** -r))
    if tail_correction:
        total += eisenstein_tail_estimate(r, z, K)
    return total


def eisenstein_tail_estimate(r: int, z, K: int):
    """Midpoint estimate of the terms with ``|k| > K``.

    Integrates ``(t+z)^-r + (z-t)^-r`` over ``t >= K + 1/2``.
    """
    zc = complex(z)
    t = K + 0.5
    if r == 1:
        est = -cmath.log((t + zc) / (t - zc))
    else:
        est = ((t + zc) ** (1 - r) + (-1) ** r * (t - zc) ** (1 - r)) / (r - 1)
    return est.real if zc.imag == 0 else est


def eisenstein_tail_bound(r: int, z, K: int) -> float:
    """Upper bound on ``|e_r(z) - eisenstein_direct(r, z, K)|``."""
    a = abs(complex(z))
    base = K - a - 1
    if base <= 0:
        return math.inf
    if r == 1:
        # 2z/(z^2 - k^2) summed over k > K
        return 2 * a / base
    return 2.0 / ((r - 1) * base ** (r - 1))


@dataclass(frozen=True)
class EisensteinExpansion:
    """``e_r = sum_j c_j * pi^(r-j) * e_1^j`` with exact rational ``c_j``."""

    r: int
    terms: tuple  # ((j, c_j), ...) ascending in j, c_j != 0

    def evaluate_e1(self, e1):
        return sum(float(c) * math.pi ** (self.r - j) * e1 ** j for j, c in self.terms)

    def evaluate(self, z):
        """Value at ``z`` using ``e_1(z) = pi cot(pi z)``."""
        if _near_integer(z):
            raise PoleError(f"e_r has a pole at the integer nearest {z!r}")
        zc = complex(z)
        if zc.imag == 0:
            e1 = math.pi / math.tan(math.pi * zc.real)
        else:
            e1 = math.pi / cmath.tan(math.pi * zc)
        return self.evaluate_e1(e1)

    def __str__(self):
        parts = []
        for j, c in self.terms:
            factors = []
            pk = self.r - j
            if pk:
                factors.append("pi" if pk == 1 else f"pi^{pk}")
            if j:
                factors.append("e_1" if j == 1 else f"e_1^{j}")
            mag = abs(c)
            body = " ".join(factors)
            if mag != 1 or not body:
                body = f"{format_rational(mag)} {body}".strip()
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            rhs = "0"
        else:
            sign, body = parts[0]
            rhs = ("-" if sign == "-" else "") + body
            for sign, body in parts[1:]:
                rhs += f" {sign} {body}"
        return f"e_{self.r} = {rhs}"


def eisenstein_expansion(r: int) -> EisensteinExpansion:
    """Write e_r as a polynomial in e_1.

    ``e_r = (-1)^r pi^r / (r-1)! * P_{r-1}(-e_1/pi)``, so with
    ``P_{r-1}(x) = sum_j p_j x^j`` the coefficient of ``pi^(r-j) e_1^j`` is
    ``(-1)^(r+j) p_j / (r-1)!``.
    """
    if r < 1:
        raise DomainError("r must be a positive integer")
    p = family_poly(PolyFamily.TAN, r - 1).coefficients
    scale = factorial(r - 1)
    terms = tuple((j, Fraction((-1) ** (r + j)) * pj / scale)
                  for j, pj in enumerate(p) if pj != 0)
    return EisensteinExpansion(r, terms)


def eisenstein_explicit(r: int, z: float) -> float:
    """e_r(z) from the csc^2 / Stirling-number sum, real ``z``.

    ``e_r = (-1)^(r+1) i^r pi^r / (r-1)! * csc^2(pi z)
    * sum_{k=1}^{r-1} S(r-1, k) 2^(r-1-k) k! (i cot(pi z) - 1)^(k-1)`` for r >= 2.
    """
    if r < 2:
        raise DomainError("the explicit sum needs r >= 2")
    if _near_integer(z):
        raise PoleError(f"e_r has a pole at the integer nearest {z!r}")
    cot = 1.0 / math.tan(math.pi * z)
    csc2 = 1.0 / math.sin(math.pi * z) ** 2
    row = combinat.stirling_row(r - 1)
    w = 1j * cot - 1.0
    s = sum(row[k] * 2.0 ** (r - 1 - k) * factorial(k) * w ** (k - 1) for k in range(1, r))
    val = (-1) ** (r + 1) * 1j ** r * math.pi ** r / factorial(r - 1) * csc2 * s
    return val.real


# ---------------------------------------------------------------------------
# Hurwitz zeta and polygamma
# ---------------------------------------------------------------------------

def hurwitz_zeta(s: int, a):
    """``zeta(s, a) = sum_{k>=0} (a + k)^-s`` for integer ``s >= 2``, ``Re a > 0``.

    Euler-Maclaurin: sum terms directly until ``Re(a + N) >= 15``, then add the
    integral, the half end term and 12 Bernoulli corrections.  Relative
    accuracy is around 1e-14 in practice.  Returns ``float`` for real ``a``.
    """
    if int(s) != s or s < 2:
        raise DomainError("s must be an integer >= 2")
    s = int(s)
    _check_finite(a, "a")
    ac = complex(a)
    if ac.real <= 0:
        raise DomainError("hurwitz_zeta needs Re(a) > 0")
    real = ac.imag == 0
    x = ac.real if real else ac

    total = 0.0
    while (x.real if not real else x) < EM_SHIFT:
        total += x ** -s
        x += 1
    total += x ** (1 - s) / (s - 1) + 0.5 * x ** -s
    # sum_j B_2j/(2j)! * s(s+1)...(s+2j-2) * x^(-s-2j+1)
    rising = float(s)
    xpow = x ** (-s - 1)
    inv_x2 = 1.0 / (x * x)
    fact = 2.0
    for j in range(1, EM_TERMS + 1):
        total += _EM_BERNOULLI[j] / fact * rising * xpow
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
        xpow *= inv_x2
    return total


def digamma(z):
    """psi(z) by upward recurrence to ``Re z >= 15`` and the asymptotic series."""
    _check_finite(z, "z")
    zc = complex(z)
    if zc.real <= 0 and _near_integer(zc):
        raise PoleError(f"digamma has a pole at {z!r}")
    real = zc.imag == 0
    x = zc.real if real else zc
    log = math.log if real else cmath.log
    acc = 0.0
    while x.real < EM_SHIFT:
        acc -= 1.0 / x
        x += 1
    inv_x2 = 1.0 / (x * x)
    series = 0.0
    xpow = inv_x2
    for j in range(1, EM_TERMS + 1):
        series += _EM_BERNOULLI[j] / (2 * j) * xpow
        xpow *= inv_x2
    return acc + log(x) - 0.5 / x - series


def polygamma(n: int, z):
    """psi_n(z), the (n+1)-th derivative of log Gamma.

    ``n >= 1`` goes through ``psi_n(z) = (-1)^(n+1) n! zeta(n+1, z)``; points
    with ``Re z <= 0`` are first shifted right with
    ``psi_n(z) = psi_n(z+1) - (-1)^n n! z^-(n+1)``.  Relative accuracy is
    about 1e-13 for ``Re z > 0``; the shift cancels digits to the left of
    the imaginary axis (roughly 1e-10 at ``z = -1.5``, ``n = 6``).
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        return digamma(z)
    _check_finite(z, "z")
    zc = complex(z)
    if zc.real <= 0 and _near_integer(zc):
        raise PoleError(f"polygamma has a pole at {z!r}")
    x = zc.real if zc.imag == 0 else zc
    sign = (-1) ** (n + 1)
    nf = float(factorial(n))
    correction = 0.0
    while x.real <= 0:
        correction += x ** -(n + 1)
        x += 1
    return sign * nf * (hurwitz_zeta(n + 1, x) + correction)


def reflection_lhs(n: int, z: float) -> float:
    """``psi_n(z) - (-1)^n psi_n(1 - z)``."""
    return polygamma(n, z) - (-1) ** n * polygamma(n, 1 - z)


def reflection_rhs(n: int, z: float) -> float:
    """``pi^(n+1) P_n(-cot(pi z))`` for ``0 < z < 1``."""
    if not 0 < z < 1:
        raise DomainError("reflection_rhs needs 0 < z < 1")
    cot = 1.0 / math.tan(math.pi * z)
    p = family_poly(PolyFamily.TAN, n).poly
    return math.pi ** (n + 1) * poly_eval_float(p, -cot)


def reflection_rhs_explicit(n: int, z: float) -> float:
    """Same value through the csc^2 / Stirling sum (valid for ``n >= 1``).

    ``-i^(n+1) pi^(n+1) csc^2(pi z) sum_{k=1}^n S(n,k) 2^(n-k) k! (i cot(pi z) - 1)^(k-1)``
    """
    if n < 1:
        raise DomainError("the explicit sum needs n >= 1; the k=0 term is not zero at n=0")
    if not 0 < z < 1:
        raise DomainError("reflection_rhs_explicit needs 0 < z < 1")
    cot = 1.0 / math.tan(math.pi * z)
    csc2 = 1.0 / math.sin(math.pi * z) ** 2
    row = combinat.stirling_row(n)
    w = 1j * cot - 1.0
    s = sum(row[k] * 2.0 ** (n - k) * factorial(k) * w ** (k - 1) for k in range(1, n + 1))
    return (-(1j ** (n + 1)) * math.pi ** (n + 1) * csc2 * s).real


# ---------------------------------------------------------------------------
# High derivatives of csc / csch and the families in general
# ---------------------------------------------------------------------------

def csc_high_derivative(m: int, theta: float) -> float:
    """``(d/dtheta)^m csc(theta)`` from ``csc = (tan(theta/2) + cot(theta/2)) / 2``.

    Equals ``2^-(m+1) [P_m(tan(theta/2)) + (-1)^m P_m(cot(theta/2))]``.
    """
    t = theta / math.pi
    if abs(t - round(t)) < POLE_TOL:
        raise PoleError(f"csc has a pole at theta={theta!r}")
    half = 0.5 * theta
    tan_h = math.tan(half)
    cot_h = 1.0 / tan_h
    p = family_poly(PolyFamily.TAN, m).poly
    return (poly_eval_float(p, tan_h) + (-1) ** m * poly_eval_float(p, cot_h)) / 2.0 ** (m + 1)


def csch_high_derivative(m: int, theta: float) -> float:
    """``(d/dtheta)^m csch(theta) = csch(theta) * S_m(coth(theta))``."""
    if abs(theta) < POLE_TOL:
        raise PoleError("csch has a pole at 0")
    s = family_poly(PolyFamily.CSCH, m).poly
    return poly_eval_float(s, 1.0 / math.tanh(theta)) / math.sinh(theta)


_FUNCS = {
    PolyFamily.TANH: (math.tanh, None),
    PolyFamily.COTH: (lambda t: 1.0 / math.tanh(t), None),
    PolyFamily.TAN: (math.tan, None),
    PolyFamily.COT: (lambda t: 1.0 / math.tan(t), None),
    PolyFamily.SECH: (math.tanh, lambda t: 1.0 / math.cosh(t)),
    PolyFamily.CSCH: (lambda t: 1.0 / math.tanh(t), lambda t: 1.0 / math.sinh(t)),
    PolyFamily.SEC: (math.tan, lambda t: 1.0 / math.cos(t)),
}


def family_derivative(family, m: int, theta: float) -> float:
    """``(d/dtheta)^m f(theta)`` for the family's function ``f``, via ``F_m``."""
    family = PolyFamily.parse(family)
    arg, pre = _FUNCS[family]
    value = poly_eval_float(family_poly(family, m).poly, arg(theta))
    return value * pre(theta) if pre else value

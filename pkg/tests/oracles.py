"""Independent reference computations used by the tests.

Nothing here imports the code paths it is used to check.
"""

from fractions import Fraction
from math import factorial

import mpmath


def set_partitions(items):
    """Yield every partition of ``items`` as a list of blocks."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def stirling2_bruteforce(n, k):
    return sum(1 for p in set_partitions(range(n)) if len(p) == k)


def bell_numbers(n_max):
    """Bell numbers B_0..B_{n_max} from the Bell triangle."""
    bells = [1]
    row = [1]
    for _ in range(n_max):
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
        bells.append(row[0])
    return bells


# -- exact truncated power series (lists of Fractions, index = power) ----------

def series_reciprocal(a, order):
    """Coefficients of 1/a(x) up to x^order; needs a[0] != 0."""
    b = [Fraction(0)] * (order + 1)
    b[0] = Fraction(1) / a[0]
    for n in range(1, order + 1):
        s = sum(a[k] * b[n - k] for k in range(1, min(n, len(a) - 1) + 1))
        b[n] = -s / a[0]
    return b


def series_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[:order + 1]):
        if x:
            for j, y in enumerate(b[:order + 1 - i]):
                out[i + j] += x * y
    return out


def cosh_series(order):
    return [Fraction(1, factorial(n)) if n % 2 == 0 else Fraction(0) for n in range(order + 1)]


def cos_series(order):
    return [Fraction((-1) ** (n // 2), factorial(n)) if n % 2 == 0 else Fraction(0)
            for n in range(order + 1)]


def sin_series(order):
    return [Fraction((-1) ** (n // 2), factorial(n)) if n % 2 == 1 else Fraction(0)
            for n in range(order + 1)]


def sech_maclaurin_derivatives(order):
    """d^n/dx^n sech(x) at 0 for n = 0..order (the Euler numbers)."""
    c = series_reciprocal(cosh_series(order), order)
    return [c[n] * factorial(n) for n in range(order + 1)]


def tan_maclaurin_derivatives(order):
    """d^n/dx^n tan(x) at 0 for n = 0..order."""
    c = series_mul(sin_series(order), series_reciprocal(cos_series(order), order), order)
    return [c[n] * factorial(n) for n in range(order + 1)]


# -- float Taylor arithmetic ---------------------------------------------------

def float_series_reciprocal(a, order):
    b = [0.0] * (order + 1)
    b[0] = 1.0 / a[0]
    for n in range(1, order + 1):
        b[n] = -sum(a[k] * b[n - k] for k in range(1, n + 1)) / a[0]
    return b


def csch_derivatives_by_series(theta, order):
    """Derivatives of csch at theta from the Taylor series of csch(theta + h).

    ``sinh(theta + h) = sinh(theta) cosh(h) + cosh(theta) sinh(h)`` is expanded
    in h and inverted term by term.
    """
    import math

    sh, ch = math.sinh(theta), math.cosh(theta)
    a = [(sh if n % 2 == 0 else ch) / math.factorial(n) for n in range(order + 1)]
    b = float_series_reciprocal(a, order)
    return [b[n] * math.factorial(n) for n in range(order + 1)]


# -- sech integrals, termwise ---------------------------------------------------

def sech_exp_integral_series(n, a, dps=30):
    """int_0^inf x^n sech(x) e^{iax} dx from sech x = 2 sum (-1)^k e^{-(2k+1)x}.

    Each term integrates to ``n! / ((2k+1) - i a)^(n+1)``; the alternating sum
    is accelerated by mpmath.nsum.
    """
    with mpmath.workdps(dps):
        s = mpmath.nsum(lambda k: (-1) ** int(k) / ((2 * k + 1) - 1j * a) ** (n + 1), [0, mpmath.inf])
        return complex(2 * factorial(n) * s)

"""Exact scalars and dense univariate polynomials.

``Rational`` is :class:`fractions.Fraction`; it already keeps ``den > 0`` and
``gcd(num, den) == 1`` after every operation.  ``GaussRational`` adds an
imaginary part on top of it, and ``Poly`` is a dense, trimmed coefficient
tuple over ``GaussRational``.

All values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Union

from .errors import ComplexResidue

Rational = Fraction

_FZERO = Fraction(0)

Scalar = Union[int, Fraction, "GaussRational"]


def format_rational(q: Fraction) -> str:
    """Serialize as ``"num/den"``, or ``"num"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class GaussRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @classmethod
    def coerce(cls, value: Scalar) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, (int, _RationalABC)):
            return cls(value, 0)
        if isinstance(value, complex):
            raise TypeError("refusing to convert a float complex to an exact value")
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussRational")

    # -- predicates / conversions -------------------------------------------

    def is_real(self) -> bool:
        return self.im == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def real_part(self) -> Fraction:
        """Return ``re``; raise if the imaginary part is not exactly zero."""
        if self.im != 0:
            raise ComplexResidue(f"expected a real value, got {self!r}")
        return self.re

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.im and not o.im:
            return GaussRational(self.re + o.re, _FZERO)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.im and not o.im:
            return GaussRational(self.re * o.re, _FZERO)
        return GaussRational(self.re * o.re - self.im * o.im,
                             self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("GaussRational division by zero")
        num = self * o.conjugate()
        return GaussRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (GaussRational(1) / self) ** (-k)
        result = GaussRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GaussRational({format_rational(self.re)})"
        return f"GaussRational({format_rational(self.re)}, {format_rational(self.im)})"

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        if self.re == 0:
            return f"{format_rational(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}i"


I = GaussRational(0, 1)
ZERO = GaussRational(0)
ONE = GaussRational(1)


def i_power(k: int) -> GaussRational:
    """Return ``i**k`` without repeated multiplication."""
    return (ONE, I, -ONE, -I)[k % 4]


class Poly:
    """Dense polynomial; ``coeffs[j]`` is the coefficient of ``z**j``.

    Trailing zeros are always trimmed, so the zero polynomial has an empty
    coefficient tuple and ``degree`` is ``None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [GaussRational.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, j: int, c: Scalar = 1) -> "Poly":
        return cls([0] * j + [c])

    @property
    def degree(self):
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def real_coefficients(self) -> list:
        """Coefficients as Fractions; raises ComplexResidue on any imaginary part."""
        out = []
        for j, c in enumerate(self.coeffs):
            if c.im != 0:
                raise ComplexResidue(f"coefficient of z^{j} is {c}, not real")
            out.append(c.re)
        return out

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j):
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return ZERO

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Poly.constant(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def __add__(self, other):
        return poly_add(self, _as_poly(other))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return poly_add(self, -_as_poly(other))

    def __rsub__(self, other):
        return poly_add(_as_poly(other), -self)

    def __mul__(self, other):
        return poly_mul(self, _as_poly(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly.constant(1)
        for _ in range(k):
            result = poly_mul(result, self)
        return result

    def __call__(self, z):
        if isinstance(z, (int, _RationalABC, GaussRational)):
            return poly_eval(self, GaussRational.coerce(z))
        return poly_eval_float(self, z)

    def derivative(self) -> "Poly":
        return poly_derivative(self)

    def compose_affine(self, alpha: Scalar, beta: Scalar) -> "Poly":
        return poly_compose_affine(self, alpha, beta)


def _as_poly(x) -> Poly:
    return x if isinstance(x, Poly) else Poly.constant(x)


def poly_add(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for j, c in enumerate(b):
        out[j] = out[j] + c
    return Poly(out)


def poly_mul(p: Poly, q: Poly) -> Poly:
    if p.is_zero() or q.is_zero():
        return Poly()
    out = [ZERO] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] = out[i + j] + a * b
    return Poly(out)


def poly_scale(p: Poly, c: Scalar) -> Poly:
    c = GaussRational.coerce(c)
    return Poly(c * a for a in p.coeffs)


def poly_derivative(p: Poly) -> Poly:
    return Poly(j * c for j, c in enumerate(p.coeffs) if j > 0)


def poly_compose_affine(p: Poly, alpha: Scalar, beta: Scalar) -> Poly:
    """Return the expanded polynomial ``p(alpha*z + beta)``."""
    lin = Poly([beta, alpha])
    result = Poly()
    for c in reversed(p.coeffs):
        result = poly_add(poly_mul(result, lin), Poly.constant(c))
    return result


def poly_eval(p: Poly, z: Scalar) -> GaussRational:
    """Exact Horner evaluation."""
    z = GaussRational.coerce(z)
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def poly_eval_float(p: Poly, z):
    """Horner evaluation in floating point (real or complex ``z``).

    Coefficients are rounded to double once; real polynomials evaluated at a
    real point return a ``float``.
    """
    if p.is_real() and not isinstance(z, complex):
        acc = 0.0
        for c in reversed(p.coeffs):
            acc = acc * z + float(c.re)
        return acc
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + complex(c)
    return acc


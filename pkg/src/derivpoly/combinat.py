"""Stirling numbers of the second kind, Bernoulli, Euler and tangent numbers.

Bernoulli numbers use the convention ``B_1 = -1/2``.  That is the one the
Euler-number sum below needs: at ``m = 0`` it reads ``E_0 = 2 (1 - 2) B_1``
and ``E_0 = 1``.

The Bernoulli numbers come from their own defining recurrence, never from the
Stirling-number identity, so that identity can be checked against them.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

from .errors import NonIntegerResult

_lock = threading.Lock()
_stirling_rows: list[list[int]] = [[1]]
_bernoulli: list[Fraction] = [Fraction(1)]


def _extend_stirling(n: int) -> None:
    with _lock:
        rows = _stirling_rows
        while len(rows) <= n:
            prev = rows[-1]
            m = len(rows)
            row = [0] * (m + 1)
            for k in range(1, m + 1):
                left = prev[k] if k < m else 0
                row[k] = k * left + prev[k - 1]
            rows.append(row)


def stirling_row(n: int) -> list[int]:
    """Row ``n`` of the triangle: ``[S(n, 0), ..., S(n, n)]``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_stirling_rows):
        _extend_stirling(n)
    return list(_stirling_rows[n])


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an ``n``-set into ``k`` nonempty blocks."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        return 0
    if n >= len(_stirling_rows):
        _extend_stirling(n)
    return _stirling_rows[n][k]


def bernoulli(n: int) -> Fraction:
    """B_n from ``sum_{j=0}^{n} C(n+1, j) B_j = 0``, ``B_0 = 1``, ``B_1 = -1/2``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < len(_bernoulli):
        return _bernoulli[n]
    with _lock:
        table = _bernoulli
        while len(table) <= n:
            m = len(table)
            if m >= 3 and m % 2 == 1:
                table.append(Fraction(0))
                continue
            s = sum(comb(m + 1, j) * table[j] for j in range(m))
            table.append(-s / (m + 1))
        return table[n]


def _require_integer(q: Fraction, what: str) -> Fraction:
    if q.denominator != 1:
        raise NonIntegerResult(f"{what} = {q} is not an integer")
    return q


def euler_number(m: int) -> Fraction:
    """Euler number E_m (``sech z = sum E_n z^n / n!``) from Bernoulli numbers.

    Uses ``E_m = 1/(m+1) * sum_{k=1}^{m+1} C(m+1, k) 2^k (1 - 2^k) B_k``.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    total = sum(comb(m + 1, k) * 2**k * (1 - 2**k) * bernoulli(k)
                for k in range(1, m + 2))
    return _require_integer(Fraction(total) / (m + 1), f"E_{m}")


def euler_number_binomial_form(m: int) -> Fraction:
    """E_m via ``sum_k C(m, k) 2^{k+1}/(k+1) (1 - 2^{k+1}) B_{k+1}``."""
    total = sum(Fraction(comb(m, k) * 2 ** (k + 1) * (1 - 2 ** (k + 1)), k + 1) * bernoulli(k + 1)
                for k in range(m + 1))
    return _require_integer(total, f"E_{m}")


def tanh_center_value(m: int) -> Fraction:
    """C_m(0), the m-th derivative of tanh at 0, via Bernoulli numbers.

    ``C_m(0) = (-1)^m / (m+1) * 2^{m+1} (1 - 2^{m+1}) B_{m+1}`` for ``m >= 1``.
    """
    if m < 1:
        raise ValueError("tanh_center_value needs m >= 1")
    p = 2 ** (m + 1)
    return (-1) ** m * Fraction(p * (1 - p), m + 1) * bernoulli(m + 1)


def tangent_number(k: int) -> Fraction:
    """Tangent number ``P_{2k-1}(0)``: 1, 2, 16, 272, 7936, ..."""
    if k < 1:
        raise ValueError("tangent numbers are indexed from k = 1")
    p = 2 ** (2 * k)
    value = (-1) ** (k + 1) * Fraction(p * (p - 1), 2 * k) * bernoulli(2 * k)
    return _require_integer(value, f"T_{k}")


def stirling_alternating_sum(m: int) -> Fraction:
    """``sum_k (-1)^k S(m, k) k! / 2^k`` (equals ``omega_m(-1/2)``)."""
    row = stirling_row(m)
    return sum((Fraction((-1) ** k * row[k] * factorial(k), 2**k) for k in range(m + 1)),
               Fraction(0))


def stirling_bernoulli_rhs(m: int) -> Fraction:
    """``2/(m+1) * (1 - 2^{m+1}) * B_{m+1}``; equals :func:`stirling_alternating_sum`."""
    return Fraction(2 * (1 - 2 ** (m + 1)), m + 1) * bernoulli(m + 1)

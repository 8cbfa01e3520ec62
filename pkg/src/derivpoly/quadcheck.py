"""Numerical checks of integral identities built from the derivative polynomials.

Integrals over ``[0, inf)`` are truncated where an analytic tail bound says the
rest is negligible, then computed by globally adaptive Gauss-Kronrod (7/15)
quadrature.  Integrands receive numpy arrays and must be vectorized.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .analytic import polygamma
from .errors import ConvergenceError, DomainError
from .exact import poly_eval_float
from .polyfamilies import PolyFamily, family_poly

# Gauss-Kronrod 7/15 on [-1, 1]
_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XK[:-1], _XK[::-1]])
_KWEIGHTS = np.concatenate([_WK[:-1], _WK[::-1]])
_GWEIGHTS = np.zeros(15)
_GWEIGHTS[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[::-1]])

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadConfig:
    abs_tol: float = 1e-12
    max_depth: int = 50
    truncation_margin: float = math.log(2.0)

    def __post_init__(self):
        if not self.abs_tol >= 1e-13:
            raise DomainError("abs_tol must be >= 1e-13")
        if not 1 <= self.max_depth <= 60:
            raise DomainError("max_depth must lie in [1, 60]")
        if not self.truncation_margin > 0:
            raise DomainError("truncation_margin must be positive")


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check.

    ``residual = |lhs - rhs| / max(1, |rhs|)`` and ``passed = residual <= tol``.
    Exact (polynomial) identities report their largest coefficient
    discrepancy as ``lhs`` against ``rhs = 0`` with ``tol = 0``.
    """

    identity_id: str
    params: dict = field(hash=False)
    lhs: complex
    rhs: complex
    residual: float
    tol: float
    passed: bool

    def to_json(self) -> dict:
        return {
            "id": self.identity_id,
            "params": dict(self.params),
            "lhs": [float(self.lhs.real), float(self.lhs.imag)],
            "rhs": [float(self.rhs.real), float(self.rhs.imag)],
            "residual": float(self.residual),
            "pass": bool(self.passed),
        }

    @classmethod
    def from_json(cls, data: dict, tol: float = math.nan) -> "CheckReport":
        return cls(
            identity_id=data["id"],
            params=dict(data["params"]),
            lhs=complex(*data["lhs"]),
            rhs=complex(*data["rhs"]),
            residual=float(data["residual"]),
            tol=tol,
            passed=bool(data["pass"]),
        )

    def format_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        return (f"{status} {self.identity_id} [{params}] "
                f"residual={self.residual:.3e} tol={self.tol:.1e}")


def make_report(identity_id: str, params: dict, lhs, rhs, tol: float) -> CheckReport:
    lhs = complex(lhs)
    rhs = complex(rhs)
    residual = abs(lhs - rhs) / max(1.0, abs(rhs))
    if math.isnan(residual):
        residual = math.inf
    return CheckReport(identity_id, dict(params), lhs, rhs, residual, tol, residual <= tol)


# ---------------------------------------------------------------------------
# Quadrature
# ---------------------------------------------------------------------------

def truncation_point(n: int, cfg: QuadConfig, decay: float = 1.0) -> float:
    """Cut-off for integrands bounded by ``x^n exp(-decay*x + margin)``.

    Starts from ``max(40, n ln n + 40) / decay`` and moves right until the
    bound falls below ``abs_tol / 10``.
    """
    base = 40.0 + (n * math.log(n) if n > 1 else 0.0)
    x = base / decay
    target = math.log(cfg.abs_tol / 10.0)
    while n * math.log(x) - decay * x + cfg.truncation_margin >= target:
        x *= 1.25
    return x


def _gk15(f, a: float, b: float):
    """Kronrod value, |K - G| and a rounding floor for one panel."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fx = np.asarray(f(c + h * _NODES))
    k = h * np.dot(_KWEIGHTS, fx)
    g = h * np.dot(_GWEIGHTS, fx)
    roundoff = 50.0 * _EPS * h * float(np.dot(_KWEIGHTS, np.abs(fx)))
    return k, float(abs(k - g)), roundoff


def integrate_interval(f: Callable, a: float, b: float, cfg: QuadConfig,
                       initial_pieces: int = 16, max_panels: int = 20_000):
    """Adaptive G7/K15 on ``[a, b]``; returns ``(value, error_estimate)``.

    Panels are bisected, largest ``|K - G|`` first, until the summed estimate
    is below ``cfg.abs_tol``.  The returned estimate also carries a rounding
    floor proportional to the integral of ``|f|``; refinement ignores it
    because bisection cannot reduce it.
    """
    heap = []
    counter = 0
    err_sum = 0.0
    edges = np.linspace(a, b, initial_pieces + 1)
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, err, rnd = _gk15(f, lo, hi)
        err_sum += err
        heap.append((-err, counter, lo, hi, val, rnd, 0))
        counter += 1
    heapq.heapify(heap)

    while not err_sum <= cfg.abs_tol:
        if not math.isfinite(err_sum):
            raise ConvergenceError("integrand produced a non-finite value")
        if len(heap) >= max_panels:
            raise ConvergenceError(
                f"{len(heap)} panels used, error estimate {err_sum:.3e} > {cfg.abs_tol:.1e}")
        neg_err, _, lo, hi, val, rnd, depth = heapq.heappop(heap)
        if depth >= cfg.max_depth:
            raise ConvergenceError(
                f"max_depth {cfg.max_depth} reached on [{lo}, {hi}] with error "
                f"estimate {err_sum:.3e} > {cfg.abs_tol:.1e}")
        mid = 0.5 * (lo + hi)
        v1, e1, r1 = _gk15(f, lo, mid)
        v2, e2, r2 = _gk15(f, mid, hi)
        err_sum += e1 + e2 + neg_err
        heapq.heappush(heap, (-e1, counter, lo, mid, v1, r1, depth + 1))
        heapq.heappush(heap, (-e2, counter + 1, mid, hi, v2, r2, depth + 1))
        counter += 2

    total = sum(item[4] for item in heap)
    total_err = sum(-item[0] + item[5] for item in heap)
    if np.iscomplexobj(total):
        return complex(total), float(total_err)
    return float(total), float(total_err)


def integrate_halfline(f: Callable, cfg: QuadConfig = QuadConfig(), n: int = 0,
                       decay: float = 1.0, return_error: bool = False):
    """Integral of ``f`` over ``[0, inf)``.

    ``|f(x)|`` must be bounded by ``x^n exp(-decay*x + cfg.truncation_margin)``
    for large ``x``; that bound fixes the truncation point.  The default
    margin ``ln 2`` covers ``x^n sech(x)``.
    """
    x_max = truncation_point(n, cfg, decay)
    value, err = integrate_interval(f, 0.0, x_max, cfg)
    return (value, err) if return_error else value


# ---------------------------------------------------------------------------
# Integrands
# ---------------------------------------------------------------------------

def sech(x):
    e = np.exp(-np.abs(x))
    return 2.0 * e / (1.0 + e * e)


def _cos_integrand(n, a):
    phase = 0.5 * math.pi * n
    return lambda x: x ** n * sech(x) * np.cos(a * x + phase)


def _sin_integrand(n, a):
    phase = 0.5 * math.pi * n
    return lambda x: x ** n * sech(x) * np.sin(a * x + phase)


def _exp_integrand(n, a):
    return lambda x: x ** n * sech(x) * np.exp(1j * a * x)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def cos_identity_rhs(n: int, a: float) -> float:
    """``(pi/2)^(n+1) sech(pi a/2) S_n(tanh(pi a/2))``."""
    t = 0.5 * math.pi * a
    s = family_poly(PolyFamily.SECH, n).poly
    return (0.5 * math.pi) ** (n + 1) / math.cosh(t) * poly_eval_float(s, math.tanh(t))


def sin_identity_rhs(n: int, a: float) -> complex:
    """``-(pi/2)^(n+1) C_n(tanh(pi a/2))
    + i/2^(2n+1) [(-i)^n psi_n((1-ia)/4) - i^n psi_n((1+ia)/4)]``."""
    t = 0.5 * math.pi * a
    c = family_poly(PolyFamily.TANH, n).poly
    poly_part = -(0.5 * math.pi) ** (n + 1) * poly_eval_float(c, math.tanh(t))
    zm = complex(0.25, -0.25 * a)
    zp = complex(0.25, 0.25 * a)
    psi_part = 1j / 2 ** (2 * n + 1) * ((-1j) ** n * complex(polygamma(n, zm))
                                        - 1j ** n * complex(polygamma(n, zp)))
    return poly_part + psi_part


def exp_identity_rhs(n: int, a: float) -> complex:
    """``(-1)^n i^n (pi/2)^(n+1) [sech(pi a/2) S_n(tanh) - i C_n(tanh)]
    + 2^-(2n+1) [psi_n((1+ia)/4) - (-1)^n psi_n((1-ia)/4)]``."""
    t = 0.5 * math.pi * a
    th = math.tanh(t)
    s = poly_eval_float(family_poly(PolyFamily.SECH, n).poly, th)
    c = poly_eval_float(family_poly(PolyFamily.TANH, n).poly, th)
    poly_part = (-1) ** n * 1j ** n * (0.5 * math.pi) ** (n + 1) * (s / math.cosh(t) - 1j * c)
    zm = complex(0.25, -0.25 * a)
    zp = complex(0.25, 0.25 * a)
    psi_part = (complex(polygamma(n, zp)) - (-1) ** n * complex(polygamma(n, zm))) / 2 ** (2 * n + 1)
    return poly_part + psi_part


def hoffman_rhs(n: int, a: float, kind: str) -> float:
    """``pi^(n+1) csc(a pi) Q_n(-cot a pi)`` (kind ``"plus"``, denominator
    ``e^x + 1``) or ``pi^(n+1) P_n(-cot a pi)`` (kind ``"minus"``, ``e^x - 1``)."""
    cot = 1.0 / math.tan(math.pi * a)
    if kind == "plus":
        q = family_poly(PolyFamily.SEC, n).poly
        return math.pi ** (n + 1) / math.sin(math.pi * a) * poly_eval_float(q, -cot)
    if kind == "minus":
        p = family_poly(PolyFamily.TAN, n).poly
        return math.pi ** (n + 1) * poly_eval_float(p, -cot)
    raise ValueError(f"kind must be 'plus' or 'minus', got {kind!r}")


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

def cos_integral(n: int, a: float, cfg: QuadConfig = QuadConfig()) -> float:
    return integrate_halfline(_cos_integrand(n, a), cfg, n=n)


def sin_integral(n: int, a: float, cfg: QuadConfig = QuadConfig()) -> float:
    return integrate_halfline(_sin_integrand(n, a), cfg, n=n)


def exp_integral(n: int, a: float, cfg: QuadConfig = QuadConfig()) -> complex:
    return integrate_halfline(_exp_integrand(n, a), cfg, n=n)


def check_cos_identity(n: int, a: float, cfg: QuadConfig = QuadConfig(),
                       tol: float = 1e-8) -> CheckReport:
    if not 0 <= n <= 8:
        raise DomainError("check_cos_identity supports 0 <= n <= 8")
    return make_report("integral.cos", {"n": n, "a": a},
                       cos_integral(n, a, cfg), cos_identity_rhs(n, a), tol)


def check_sin_identity(n: int, a: float, cfg: QuadConfig = QuadConfig(),
                       tol: float = 1e-7) -> CheckReport:
    if not 0 <= n <= 6:
        raise DomainError("check_sin_identity supports 0 <= n <= 6")
    return make_report("integral.sin", {"n": n, "a": a},
                       sin_integral(n, a, cfg), sin_identity_rhs(n, a), tol)


def check_exp_identity(n: int, a: float, cfg: QuadConfig = QuadConfig(),
                       tol: float = 1e-7) -> CheckReport:
    if not 0 <= n <= 6:
        raise DomainError("check_exp_identity supports 0 <= n <= 6")
    return make_report("integral.exp", {"n": n, "a": a},
                       exp_integral(n, a, cfg), exp_identity_rhs(n, a), tol)


def check_exp_decomposition(n: int, a: float, cfg: QuadConfig = QuadConfig(),
                            tol: float = 1e-10) -> CheckReport:
    """The complex integral against its cos/sin parts.

    ``e^{iax} = (-i)^n [cos(ax + pi n/2) + i sin(ax + pi n/2)]``, so the
    exp integral equals ``(-i)^n (I_cos + i I_sin)``.
    """
    combined = (-1j) ** n * (cos_integral(n, a, cfg) + 1j * sin_integral(n, a, cfg))
    return make_report("integral.exp_decomposition", {"n": n, "a": a},
                       exp_integral(n, a, cfg), combined, tol)


def hoffman_integral(n: int, a: float, kind: str, cfg: QuadConfig = QuadConfig()) -> float:
    """``int_{-inf}^{inf} x^n e^{ax} / (e^x +- 1) dx``, split at 0."""
    if kind == "plus":
        def right(x):
            return x ** n * np.exp((a - 1.0) * x) / (1.0 + np.exp(-x))

        def left(u):
            return (-u) ** n * np.exp(-a * u) / (1.0 + np.exp(-u))
    elif kind == "minus":
        def right(x):
            return x ** n * np.exp((a - 1.0) * x) / -np.expm1(-x)

        def left(u):
            return (-u) ** n * np.exp(-a * u) / np.expm1(-u)
    else:
        raise ValueError(f"kind must be 'plus' or 'minus', got {kind!r}")
    pos = integrate_halfline(right, cfg, n=n, decay=1.0 - a)
    neg = integrate_halfline(left, cfg, n=n, decay=a)
    return pos + neg


def check_hoffman_integrals(n: int, a: float, cfg: QuadConfig = QuadConfig(),
                            kind: str = "plus", tol: float = 1e-7) -> CheckReport:
    """Whole-line integrals with denominators ``e^x + 1`` or ``e^x - 1``."""
    if not 0 < a < 1:
        raise DomainError("a must lie in (0, 1)")
    if kind == "minus" and n < 1:
        raise DomainError("the e^x - 1 integral needs n >= 1")
    if n < 0:
        raise DomainError("n must be nonnegative")
    return make_report(f"integral.hoffman_{kind}", {"n": n, "a": a},
                       hoffman_integral(n, a, kind, cfg), hoffman_rhs(n, a, kind), tol)

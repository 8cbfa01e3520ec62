import json
import math

import mpmath
import numpy as np
import pytest

from derivpoly.errors import ConvergenceError, DomainError
from derivpoly.quadcheck import (
    CheckReport,
    QuadConfig,
    check_cos_identity,
    check_exp_decomposition,
    check_exp_identity,
    check_hoffman_integrals,
    check_sin_identity,
    cos_identity_rhs,
    cos_integral,
    exp_integral,
    hoffman_integral,
    hoffman_rhs,
    integrate_halfline,
    integrate_interval,
    make_report,
    sech,
    sin_integral,
    truncation_point,
)

from oracles import sech_exp_integral_series

PI = math.pi


# -- the integrator -------------------------------------------------------------

def test_integrate_examples():
    assert integrate_halfline(sech) == pytest.approx(PI / 2, rel=1e-13)
    assert integrate_halfline(lambda x: np.exp(-x), QuadConfig(truncation_margin=1e-3)) == pytest.approx(1.0, rel=1e-12)
    catalan = float(mpmath.catalan)
    assert integrate_halfline(lambda x: x * sech(x), n=1) == pytest.approx(2 * catalan, rel=1e-12)


def test_catalan_by_direct_series():
    # x sech x integrates termwise to 2 sum (-1)^k / (2k+1)^2
    k = np.arange(2_000_000, dtype=float)[::-1]
    series = 2 * np.sum((-1.0) ** k / (2 * k + 1) ** 2)
    assert integrate_halfline(lambda x: x * sech(x), n=1) == pytest.approx(series, abs=1e-12)


def test_integrate_interval_polynomial_exact():
    val, err = integrate_interval(lambda x: x**7 - 3 * x**2, -1.0, 2.0, QuadConfig())
    assert val == pytest.approx(2**8 / 8 - 1 / 8 - 9, rel=1e-14)
    assert err < 1e-12


def test_truncation_point():
    cfg = QuadConfig()
    assert truncation_point(0, cfg) >= 40
    for n in range(9):
        x = truncation_point(n, cfg)
        assert x >= 40 + (n * math.log(n) if n > 1 else 0)
        assert x**n * math.exp(-x + cfg.truncation_margin) < cfg.abs_tol / 10
    assert truncation_point(2, cfg, decay=0.5) > truncation_point(2, cfg)


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_convergence_error():
    wild = lambda x: np.sin(1e4 * x) * sech(x)  # noqa: E731
    with pytest.raises(ConvergenceError):
        integrate_halfline(wild, QuadConfig(max_depth=1))
    with pytest.raises(ConvergenceError):
        integrate_interval(lambda x: 1 / np.sqrt(np.abs(x - 0.3)), 0.0, 1.0, QuadConfig())
    with pytest.raises(ConvergenceError):
        integrate_interval(lambda x: np.full_like(x, np.nan), 0.0, 1.0, QuadConfig())


@pytest.mark.parametrize("kwargs", [
    {"abs_tol": 1e-14}, {"abs_tol": 0.0}, {"max_depth": 0}, {"max_depth": 61},
    {"truncation_margin": 0.0}, {"truncation_margin": -1.0},
])
def test_quadconfig_validation(kwargs):
    with pytest.raises(DomainError):
        QuadConfig(**kwargs)


def test_self_consistency_halving_tolerance():
    cfg = QuadConfig(abs_tol=1e-10)
    fine = QuadConfig(abs_tol=5e-11)
    for n, a in [(0, 0.5), (2, 1.0), (4, 0.5)]:
        f = lambda x, n=n, a=a: x**n * sech(x) * np.cos(a * x + PI * n / 2)  # noqa: E731
        v1, e1 = integrate_halfline(f, cfg, n=n, return_error=True)
        v2, _ = integrate_halfline(f, fine, n=n, return_error=True)
        assert abs(v1 - v2) <= e1


# -- reports ------------------------------------------------------------------------

def test_report_invariants():
    r = make_report("x", {"n": 1}, 1.0 + 1e-9, 1.0, 1e-8)
    assert r.passed and r.residual == pytest.approx(1e-9, rel=1e-6)
    big = make_report("x", {}, 1000.5, 1000.0, 1e-3)
    assert big.residual == pytest.approx(5e-4) and big.passed
    small = make_report("x", {}, 0.5, 0.0, 0.1)
    assert small.residual == 0.5 and not small.passed
    nan = make_report("x", {}, float("nan"), 1.0, 1.0)
    assert not nan.passed


def test_report_json_roundtrip():
    r = make_report("integral.exp", {"n": 2, "a": 0.5}, 1 + 2j, 1 + 2.5j, 1e-7)
    data = json.loads(json.dumps(r.to_json()))
    assert set(data) == {"id", "params", "lhs", "rhs", "residual", "pass"}
    back = CheckReport.from_json(data, tol=1e-7)
    assert back == r
    assert "FAIL integral.exp" in r.format_line()


# -- cos / sin / exp identities ------------------------------------------------------------

def test_cos_examples():
    r = check_cos_identity(0, 0.0)
    assert r.lhs.real == pytest.approx(PI / 2, rel=1e-12) and r.residual < 1e-10
    r = check_cos_identity(1, 0.0)
    assert abs(r.rhs) == 0 and abs(r.lhs) < 1e-12
    assert check_cos_identity(2, 0.5).residual < 1e-8


@pytest.mark.parametrize("n", range(0, 6))
def test_cos_rhs_is_derivative_of_base_integral(n):
    # d^n/da^n of (pi/2) sech(pi a/2)
    mpmath.mp.dps = 30
    d = mpmath.diff(lambda t: mpmath.pi / 2 * mpmath.sech(mpmath.pi * t / 2), 0.5, n)
    assert cos_identity_rhs(n, 0.5) == pytest.approx(float(d), rel=1e-12, abs=1e-14)


def test_sin_examples():
    r = check_sin_identity(0, 0.0)
    assert abs(r.lhs) < 1e-14 and abs(r.rhs) < 1e-14
    assert check_sin_identity(0, 1.0).residual < 1e-8
    assert check_sin_identity(1, 0.5).residual < 1e-7


def test_exp_examples():
    r = check_exp_identity(0, 0.0)
    assert r.lhs == pytest.approx(PI / 2, rel=1e-12) and r.rhs == pytest.approx(PI / 2, rel=1e-12)
    assert check_exp_identity(0, 0.5).residual < 1e-8
    assert check_exp_identity(2, 1.0).residual < 1e-7


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("a", [0.0, 0.5, 1.0, -0.75])
def test_integrals_against_termwise_series(n, a):
    oracle = sech_exp_integral_series(n, a)
    scale = max(1.0, abs(oracle))
    assert abs(exp_integral(n, a) - oracle) < 1e-11 * scale
    # cos(ax + pi n/2) + i sin(ax + pi n/2) = i^n e^{iax}
    rotated = 1j**n * oracle
    assert abs(cos_integral(n, a) - rotated.real) < 1e-11 * scale
    assert abs(sin_integral(n, a) - rotated.imag) < 1e-11 * scale


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("a", [0.0, 0.5, 1.0, 1.7])
def test_identities_hold(n, a):
    assert check_cos_identity(n, a).residual < 1e-8
    assert check_sin_identity(n, a).residual < 1e-7
    assert check_exp_identity(n, a).residual < 1e-7
    assert check_exp_decomposition(n, a).passed


@pytest.mark.parametrize("n", [0, 2, 4, 6, 8])
def test_cos_symmetry_even_n(n):
    r1 = check_cos_identity(n, 0.7)
    r2 = check_cos_identity(n, -0.7)
    assert abs(r1.lhs - r2.lhs) < 1e-10 and abs(r1.rhs - r2.rhs) < 1e-10


def test_n_caps():
    with pytest.raises(DomainError):
        check_cos_identity(9, 0.1)
    with pytest.raises(DomainError):
        check_sin_identity(7, 0.1)
    with pytest.raises(DomainError):
        check_exp_identity(7, 0.1)


# -- whole-line integrals ------------------------------------------------------------

def _hoffman_oracle(n, a, kind):
    mpmath.mp.dps = 25
    sign = 1 if kind == "plus" else -1
    f = lambda x: x**n * mpmath.exp(a * x) / (mpmath.exp(x) + sign)  # noqa: E731
    return float(mpmath.quad(f, [-mpmath.inf, -5, 0, 5, mpmath.inf]))


def test_hoffman_examples():
    r = check_hoffman_integrals(0, 0.5, kind="plus")
    assert r.rhs.real == pytest.approx(PI, rel=1e-14) and r.residual < 1e-9
    r = check_hoffman_integrals(1, 0.5, kind="minus")
    assert r.rhs.real == pytest.approx(PI**2, rel=1e-14) and r.residual < 1e-8
    assert check_hoffman_integrals(2, 1 / 3, kind="plus").residual < 1e-7


@pytest.mark.parametrize("kind,n", [("plus", 0), ("plus", 1), ("plus", 3), ("minus", 1), ("minus", 2), ("minus", 4)])
@pytest.mark.parametrize("a", [0.2, 0.5, 0.8])
def test_hoffman_against_mpmath(kind, n, a):
    oracle = _hoffman_oracle(n, a, kind)
    assert hoffman_integral(n, a, kind) == pytest.approx(oracle, rel=1e-10, abs=1e-10)
    assert hoffman_rhs(n, a, kind) == pytest.approx(oracle, rel=1e-10, abs=1e-10)


def test_hoffman_domain():
    with pytest.raises(DomainError):
        check_hoffman_integrals(1, 1.0)
    with pytest.raises(DomainError):
        check_hoffman_integrals(0, 0.5, kind="minus")
    with pytest.raises(ValueError):
        hoffman_rhs(1, 0.5, "times")

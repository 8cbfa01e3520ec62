"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import json
import time
from fractions import Fraction
from math import comb

import pytest

from derivpoly.analytic import (
    eisenstein_direct,
    eisenstein_expansion,
    eisenstein_tail_bound,
    reflection_lhs,
    reflection_rhs,
)
from derivpoly.cli import cmd_poly, poly_from_json
from derivpoly.combinat import euler_number, stirling_alternating_sum, tangent_number
from derivpoly.exact import I, i_power, poly_compose_affine, poly_scale
from derivpoly.polyfamilies import PolyFamily, family_base, family_next_oracle, family_poly
from derivpoly.quadcheck import check_cos_identity, check_exp_identity, check_hoffman_integrals

from oracles import sech_maclaurin_derivatives, tan_maclaurin_derivatives


@pytest.fixture
def announce(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\n[acceptance {number}] {status} {title}" + (f" ({detail})" if detail else ""))
        assert ok, f"criterion {number} failed: {detail}"
    return emit


def test_criterion_1_explicit_equals_recurrence(announce):
    t0 = time.perf_counter()
    bad = []
    for fam in PolyFamily:
        p = family_base(fam)
        for m in range(1, 31):
            p = family_next_oracle(fam, p)
            if family_poly(fam, m).poly != p:
                bad.append((fam.value, m))
    elapsed = time.perf_counter() - t0
    announce(1, "explicit formulas equal the recurrence, 7 families, m <= 30",
             not bad and elapsed < 5.0, f"{elapsed:.2f}s, mismatches={bad}")


def test_criterion_2_listed_polynomials(announce):
    listed = {("tanh", 1): [1, 0, -1], ("tanh", 2): [0, -2, 0, 2],
              ("sech", 1): [0, -1], ("sech", 2): [-1, 0, 2]}
    got = {key: family_poly(*key).coefficients for key in listed}
    shown = "; ".join(f"{f}_{m}: {cmd_poly(f, m)}" for f, m in listed)
    announce(2, "C_1, C_2, S_1, S_2 reproduced exactly", got == listed, shown)


def test_criterion_3_tangent_numbers(announce):
    oracle = tan_maclaurin_derivatives(21)
    ours = [tangent_number(k) for k in range(1, 11)]
    want = [oracle[2 * k - 1] for k in range(1, 11)]
    ok = ours == want and ours[:5] == [1, 2, 16, 272, 7936]
    announce(3, "tangent numbers k <= 10 match the tan series", ok, ", ".join(str(v) for v in ours[:5]) + ", ...")


def test_criterion_4_euler_numbers(announce):
    oracle = sech_maclaurin_derivatives(20)
    sums = [euler_number(m) for m in range(21)]
    at_zero = [family_poly("sech", m).poly(0).real_part() for m in range(21)]
    ok = sums == at_zero == oracle and oracle[:9] == [1, 0, -1, 0, 5, 0, -61, 0, 1385]
    announce(4, "Euler numbers m <= 20: Bernoulli sum, S_m(0), sech series", ok, f"E_8={sums[8]}")


def _bernoulli_by_recurrence(n_max):
    # sum_{j=0}^{n} C(n+1, j) B_j = 0
    b = [Fraction(1)]
    for n in range(1, n_max + 1):
        b.append(-sum(comb(n + 1, j) * b[j] for j in range(n)) / (n + 1))
    return b


def test_criterion_5_stirling_bernoulli(announce):
    b = _bernoulli_by_recurrence(26)
    bad = [m for m in range(26)
           if stirling_alternating_sum(m) != Fraction(2, m + 1) * (1 - 2 ** (m + 1)) * b[m + 1]]
    announce(5, "alternating Stirling sum equals the Bernoulli form, m <= 25", not bad, f"bad={bad}")


def test_criterion_6_reflection(announce):
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(7):
        for z in (0.1, 0.3, 0.7, 0.9):
            rhs = reflection_rhs(n, z)
            worst = max(worst, abs(reflection_lhs(n, z) - rhs) / abs(rhs))
    elapsed = time.perf_counter() - t0
    announce(6, "polygamma reflection, n <= 6", worst < 1e-9 and elapsed < 1.0,
             f"worst rel {worst:.2e}, {elapsed:.3f}s")


def test_criterion_7_eisenstein(announce):
    worst_ratio = 0.0
    ok = True
    for r in range(1, 7):
        for z in (0.2, 0.3, 0.45):
            series = eisenstein_expansion(r).evaluate(z)
            diff = abs(series - eisenstein_direct(r, z, 10**5))
            tail = eisenstein_tail_bound(r, z, 10**5)
            if r == 2:
                ok &= tail <= 1e-4
            # the tail bound drops below double rounding once r >= 4
            bound = tail + 1e-12 * abs(series)
            ok &= diff <= bound
            worst_ratio = max(worst_ratio, diff / bound)
    exact = eisenstein_expansion(2).terms == ((0, 1), (2, 1))
    announce(7, "Eisenstein expansion vs K=1e5 direct sum, r <= 6", ok and exact,
             f"max diff/bound {worst_ratio:.2f}, e_2 = pi^2 + e_1^2: {exact}")


def test_criterion_8_integrals(announce):
    t0 = time.perf_counter()
    reports = []
    for n in range(5):
        for a in (0.0, 0.5, 1.0):
            reports.append(check_cos_identity(n, a, tol=1e-8))
        for a in (0.0, 0.5):
            reports.append(check_exp_identity(n, a, tol=1e-7))
    for n, a in ((0, 0.5), (1, 0.5), (2, 1 / 3)):
        reports.append(check_hoffman_integrals(n, a, kind="plus", tol=1e-7))
    reports.append(check_hoffman_integrals(1, 0.5, kind="minus", tol=1e-7))
    reports.append(check_hoffman_integrals(2, 1 / 3, kind="minus", tol=1e-7))
    elapsed = time.perf_counter() - t0
    failed = [r.format_line() for r in reports if not r.passed]
    worst = max(r.residual for r in reports)
    announce(8, f"{len(reports)} integral identity checks", not failed and elapsed < 30.0,
             f"worst residual {worst:.2e}, {elapsed:.2f}s, failed={failed}")


def test_criterion_9_property_suites(announce):
    problems = []
    for m in range(31):
        for fam in PolyFamily:
            p = family_poly(fam, m).poly
            if p.degree != m + fam.expected_degree_offset:
                problems.append(("degree", fam.value, m))
            if not p.is_real():
                problems.append(("real", fam.value, m))
            sign = (-1) ** m if fam in (PolyFamily.SECH, PolyFamily.CSCH, PolyFamily.SEC) else (-1) ** (m + 1)
            if poly_compose_affine(p, -1, 0) != poly_scale(p, sign):
                problems.append(("parity", fam.value, m))
        c = family_poly("tanh", m).poly
        if m >= 1 and (c(1) != 0 or c(-1) != 0):
            problems.append(("C(+-1)", m))
        if m <= 20:
            rhs = poly_scale(poly_compose_affine(c, I, 0), -i_power(m + 1))
            if family_poly("tan", m).poly != rhs:
                problems.append(("tan-tanh", m))
            for fam in PolyFamily:
                data = json.loads(cmd_poly(fam.value, m, "json"))
                if poly_from_json(data) != (fam.value, m, family_poly(fam, m).coefficients):
                    problems.append(("json", fam.value, m))
    announce(9, "parity, roots, degrees, tan/tanh identity, realness, JSON round-trip",
             not problems, f"problems={problems[:5]}")

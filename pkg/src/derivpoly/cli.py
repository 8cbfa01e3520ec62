"""Command-line front end: ``derivpoly {poly,numbers,verify,eisenstein}``.

Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import combinat
from .analytic import (
    eisenstein_direct,
    eisenstein_expansion,
    eisenstein_tail_bound,
    reflection_lhs,
    reflection_rhs,
)
from .errors import DerivPolyError
from .exact import Poly, format_rational
from .polyfamilies import PolyFamily, family_base, family_next_oracle, family_poly
from .quadcheck import (
    CheckReport,
    QuadConfig,
    check_cos_identity,
    check_exp_decomposition,
    check_exp_identity,
    check_hoffman_integrals,
    check_sin_identity,
    make_report,
)

FORMATS = ("plain", "latex", "json", "csv")
NUMBER_KINDS = ("bernoulli", "euler", "tangent", "stirling-row")
SUITES = ("polys", "reflection", "eisenstein", "integrals", "all")

LISTED_POLYS = [
    ("tanh", 1, [1, 0, -1]),
    ("tanh", 2, [0, -2, 0, 2]),
    ("sech", 1, [0, -1]),
    ("sech", 2, [-1, 0, 2]),
]


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _terms_descending(coeffs):
    for j in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[j])
        if c != 0:
            yield j, c


def render_plain(coeffs) -> str:
    """Descending powers of ``z``: ``[0, -2, 0, 2]`` -> ``"2z^3 - 2z"``."""
    out = ""
    for j, c in _terms_descending(coeffs):
        mag = abs(c)
        if j == 0:
            body = format_rational(mag)
        else:
            var = "z" if j == 1 else f"z^{j}"
            if mag == 1:
                body = var
            elif mag.denominator == 1:
                body = f"{mag.numerator}{var}"
            else:
                body = f"({format_rational(mag)}){var}"
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"


def render_latex(coeffs) -> str:
    out = ""
    for j, c in _terms_descending(coeffs):
        mag = abs(c)
        if mag.denominator == 1:
            num = str(mag.numerator)
        else:
            num = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        if j == 0:
            body = num
        else:
            var = "z" if j == 1 else f"z^{{{j}}}"
            body = var if mag == 1 else num + var
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"


def poly_to_json(family: str, m: int, coeffs) -> dict:
    return {"family": family, "m": m, "coefficients": [format_rational(c) for c in coeffs]}


def poly_from_json(data: dict) -> tuple[str, int, list[Fraction]]:
    return data["family"], int(data["m"]), [Fraction(c) for c in data["coefficients"]]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_poly(family: str, m: int, fmt: str = "plain") -> str:
    fam = PolyFamily.parse(family)
    coeffs = family_poly(fam, m).coefficients
    if fmt == "json":
        return json.dumps(poly_to_json(fam.value, m, coeffs))
    if fmt == "latex":
        return render_latex(coeffs)
    if fmt == "csv":
        return "\n".join(["power,coefficient"] +
                         [f"{j},{format_rational(c)}" for j, c in enumerate(coeffs)])
    return render_plain(coeffs)


def number_values(kind: str, n_max: int) -> list[tuple[int, Fraction]]:
    if kind == "bernoulli":
        return [(n, combinat.bernoulli(n)) for n in range(n_max + 1)]
    if kind == "euler":
        return [(n, combinat.euler_number(n)) for n in range(n_max + 1)]
    if kind == "tangent":
        return [(k, combinat.tangent_number(k)) for k in range(1, n_max + 1)]
    if kind == "stirling-row":
        return [(k, Fraction(v)) for k, v in enumerate(combinat.stirling_row(n_max))]
    raise ValueError(f"unknown kind {kind!r}")


def cmd_numbers(kind: str, n_max: int, fmt: str = "plain") -> str:
    values = number_values(kind, n_max)
    if fmt == "json":
        return json.dumps({"kind": kind, "n_max": n_max,
                           "index": [i for i, _ in values],
                           "values": [format_rational(v) for _, v in values]})
    if fmt == "csv":
        return "\n".join(["index,value"] + [f"{i},{format_rational(v)}" for i, v in values])
    if fmt == "latex":
        return ", ".join(render_latex([v]) for _, v in values)
    return ", ".join(format_rational(v) for _, v in values)


def cmd_eisenstein(r: int, z=None, terms: int = 100_000, fmt: str = "plain", tol=None):
    """Return ``(text, exit_code)``."""
    exp = eisenstein_expansion(r)
    if z is None:
        if fmt == "json":
            return json.dumps({"r": r, "terms": [[j, format_rational(c)] for j, c in exp.terms]}), 0
        return str(exp), 0
    direct = eisenstein_direct(r, z, terms)
    series = exp.evaluate(z)
    diff = abs(direct - series)
    bound = eisenstein_tail_bound(r, z, terms) + 1e-12 * max(1.0, abs(series))
    limit = bound if tol is None else tol
    ok = diff <= limit
    if fmt == "json":
        text = json.dumps({"r": r, "z": z, "terms": terms, "direct": direct,
                           "expansion": series, "difference": diff, "tail_bound": bound,
                           "pass": ok})
    else:
        text = (f"{exp}\n"
                f"direct sum (K={terms}): {direct:.15g}\n"
                f"expansion:            {series:.15g}\n"
                f"difference:           {diff:.3e} (limit {limit:.3e})")
    return text, 0 if ok else 1


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def _exact_report(identity_id, params, got: Poly, want: Poly) -> CheckReport:
    diff = got - want
    worst = max((abs(complex(c)) for c in diff.coeffs), default=0.0)
    return make_report(identity_id, params, worst, 0.0, 0.0)


def verify_polys(max_m: int = 30):
    for fam in PolyFamily:
        p = family_base(fam)
        if p != family_poly(fam, 0).poly:
            yield _exact_report("polys.base", {"family": fam.value, "m": 0},
                                family_poly(fam, 0).poly, p)
        for m in range(1, max_m + 1):
            p = family_next_oracle(fam, p)
            yield _exact_report("polys.oracle", {"family": fam.value, "m": m},
                                family_poly(fam, m).poly, p)
    for name, m, coeffs in LISTED_POLYS:
        yield _exact_report("polys.listed", {"family": name, "m": m},
                            family_poly(name, m).poly, Poly(coeffs))


def verify_reflection(ns, zs, tol=1e-9):
    for n in ns:
        for z in zs:
            yield make_report("reflection", {"n": n, "z": z},
                              reflection_lhs(n, z), reflection_rhs(n, z), tol)


def verify_eisenstein(rs, zs, terms=100_000, tol=None):
    for r in rs:
        for z in zs:
            series = eisenstein_expansion(r).evaluate(z)
            bound = eisenstein_tail_bound(r, z, terms) + 1e-12 * max(1.0, abs(series))
            limit = bound if tol is None else tol
            # residual is relative with a floor of 1; scale the bound the same way
            yield make_report("eisenstein", {"r": r, "z": z, "K": terms},
                              eisenstein_direct(r, z, terms), series,
                              limit / max(1.0, abs(series)))


def verify_integrals(ns=None, as_=None, tol=None, cfg=QuadConfig()):
    cos_ns = ns if ns is not None else range(0, 5)
    cos_as = as_ if as_ is not None else (0.0, 0.5, 1.0)
    exp_as = as_ if as_ is not None else (0.0, 0.5)
    for n in cos_ns:
        for a in cos_as:
            yield check_cos_identity(n, a, cfg, tol=tol or 1e-8)
            yield check_sin_identity(n, a, cfg, tol=tol or 1e-7)
        for a in exp_as:
            yield check_exp_identity(n, a, cfg, tol=tol or 1e-7)
            yield check_exp_decomposition(n, a, cfg, tol=tol or 1e-10)
    if ns is None and as_ is None:
        hoffman = [(0, 0.5, "plus"), (1, 0.5, "minus"), (2, 1 / 3, "plus")]
    else:
        hoffman = [(n, a, kind) for n in cos_ns for a in cos_as if 0 < a < 1
                   for kind in ("plus", "minus") if kind == "plus" or n >= 1]
    for n, a, kind in hoffman:
        yield check_hoffman_integrals(n, a, cfg, kind=kind, tol=tol or 1e-7)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _nonneg_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def _pos_int(text):
    v = _nonneg_int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _finite_float(text):
    try:
        v = float(Fraction(text)) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return v


def _float_list(text):
    return [_finite_float(t) for t in text.split(",") if t.strip()]


def _int_list(text):
    return [_nonneg_int(t) for t in text.split(",") if t.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("--tol", type=_finite_float, default=None,
                        help="override the default tolerance of each check")
    common.add_argument("--quiet", action="store_true",
                        help="print only failures and the summary line")

    parser = argparse.ArgumentParser(
        prog="derivpoly",
        description="Derivative polynomials of tan, tanh, sec, sech and friends.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="print a derivative polynomial")
    p.add_argument("family", choices=[f.value for f in PolyFamily])
    p.add_argument("m", type=_nonneg_int)

    p = sub.add_parser("numbers", parents=[common], help="print a number sequence")
    p.add_argument("kind", choices=NUMBER_KINDS)
    p.add_argument("n_max", type=_nonneg_int)

    p = sub.add_parser("verify", parents=[common], help="run verification checks")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-m", type=_nonneg_int, default=30)
    p.add_argument("--n", type=_int_list, default=None,
                   help="comma-separated orders (reflection, integrals)")
    p.add_argument("--z", type=_float_list, default=None,
                   help="comma-separated points in (0, 1) (reflection, eisenstein)")
    p.add_argument("--a", type=_float_list, default=None,
                   help="comma-separated parameters (integrals)")
    p.add_argument("--r", type=lambda t: [_pos_int(x) for x in t.split(",")], default=None,
                   help="comma-separated Eisenstein orders")
    p.add_argument("--terms", type=_pos_int, default=100_000)

    p = sub.add_parser("eisenstein", parents=[common], help="Eisenstein series e_r in terms of e_1")
    p.add_argument("--r", type=_pos_int, required=True)
    p.add_argument("--z", type=_finite_float, default=None)
    p.add_argument("--terms", type=_pos_int, default=100_000)
    return parser


def _run_verify(args, out) -> int:
    suites = ("polys", "reflection", "eisenstein", "integrals") if args.suite == "all" else (args.suite,)
    zs = args.z
    if zs is not None and any(not 0 < z < 1 for z in zs):
        raise _UsageError("--z values must lie in (0, 1)")
    reports = []
    for suite in suites:
        if suite == "polys":
            gen = verify_polys(args.max_m)
        elif suite == "reflection":
            gen = verify_reflection(args.n if args.n is not None else range(7),
                                    zs or (0.1, 0.3, 0.7, 0.9), tol=args.tol or 1e-9)
        elif suite == "eisenstein":
            gen = verify_eisenstein(args.r or range(1, 7), zs or (0.2, 0.3, 0.45),
                                    terms=args.terms, tol=args.tol)
        else:
            gen = verify_integrals(args.n, args.a, tol=args.tol)
        for rep in gen:
            reports.append(rep)
            if args.quiet and rep.passed:
                continue
            if args.format == "json":
                print(json.dumps(rep.to_json()), file=out)
            elif args.format == "csv":
                print(",".join([rep.identity_id, json.dumps(rep.params).replace(",", ";"),
                                f"{rep.residual:.6e}", "pass" if rep.passed else "fail"]),
                      file=out)
            else:
                print(rep.format_line(), file=out)
    failed = [r for r in reports if not r.passed]
    if args.format not in ("json", "csv"):
        print(f"{len(reports) - len(failed)}/{len(reports)} checks passed", file=out)
    return 1 if failed else 0


class _UsageError(Exception):
    pass


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "poly":
            print(cmd_poly(args.family, args.m, args.format), file=out)
            return 0
        if args.command == "numbers":
            print(cmd_numbers(args.kind, args.n_max, args.format), file=out)
            return 0
        if args.command == "eisenstein":
            text, code = cmd_eisenstein(args.r, args.z, args.terms, args.format, args.tol)
            print(text, file=out)
            return code
        return _run_verify(args, out)
    except _UsageError as exc:
        print(f"derivpoly: error: {exc}", file=sys.stderr)
        return 2
    except DerivPolyError as exc:
        print(f"derivpoly: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

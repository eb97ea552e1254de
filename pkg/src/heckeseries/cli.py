"""Command-line front end: ``series``, ``verify`` and ``lfactor``."""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .arith import MultiPoly, RationalFn, rf_reduce_known_factors, series_expand
from .deltaseries import delta_power_substitute, resum
from .errors import HeckeSeriesError, UnsupportedGenus
from .lfactor import (
    SatakeParams, eisenstein_params, hodge_spinor, ikeda_params, lift_merge_params,
    spin_polynomial, standard_polynomial,
)
from .spherical import SphericalContext, genus1_delta_form, genus2_delta_form
from .verify import SUITES, VerifyConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


# series -------------------------------------------------------------------------------

def closed_series(genus: int, power: int = 1) -> RationalFn:
    """``sum_delta Omega(T(p^(power*delta))) X^delta`` for genus 1 or 2."""
    if genus not in (1, 2):
        raise UnsupportedGenus(f"genus {genus} is not supported (use 1 or 2)")
    if power < 1:
        raise UsageError("--power must be positive")
    ctx = SphericalContext(genus, "x")
    form = genus2_delta_form(ctx) if genus == 2 else genus1_delta_form(ctx)
    closed = resum(delta_power_substitute(form, power), ctx.series_var)
    known = [MultiPoly.parse(t, ctx.vt) for t in ("1 - x1", "1 - x2", "x1 - x2", "1 - x1*x2")]
    return rf_reduce_known_factors(closed, known)


def _latex_rf(f: RationalFn) -> str:
    den = " ".join(f"\\left({g.to_latex()}\\right)" + (f"^{{{m}}}" if m > 1 else "")
                   for g, m in f.factors.items())
    return f"\\frac{{{f.num.to_latex()}}}{{{den or '1'}}}"


def cmd_series(args) -> int:
    closed = closed_series(args.genus, args.power)
    coeffs = series_expand(closed, "X", args.terms - 1) if args.terms else []
    if args.format == "json":
        print(_dump({"genus": args.genus, "power": args.power, "closed_form": closed.to_json(),
                     "coefficients": [c.to_json() for c in coeffs]}))
    elif args.format == "latex":
        print(_latex_rf(closed))
        for i, c in enumerate(coeffs):
            print(f"a_{{{i}}} = {c.to_latex()}")
    else:
        print(f"closed form: {closed}")
        for i, c in enumerate(coeffs):
            print(f"X^{i}: {c}")
    return EXIT_OK


# verify --------------------------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.prefix_order < 12:
        raise UsageError("--prefix-order must be at least 12")
    report = run_suite(args.suite, VerifyConfig(args.prefix_order, args.prime))
    print(_dump(report.to_json()) if args.format == "json" else report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


# lfactor -------------------------------------------------------------------------------

def _read_stdin_json():
    if sys.stdin is None or sys.stdin.isatty():
        raise UsageError("expected parameters as flags or JSON on standard input")
    text = sys.stdin.read()
    if not text.strip():
        raise UsageError("standard input is empty")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"malformed JSON on standard input: {e}") from e


def _params_from(args) -> SatakeParams:
    if args.alphas:
        if args.genus is None or args.weight is None:
            raise UsageError("--alphas needs --genus and --weight")
        return SatakeParams(args.genus, args.weight, args.alphas)
    data = _read_stdin_json()
    try:
        return SatakeParams.from_json(data)
    except (KeyError, TypeError) as e:
        raise UsageError(f"malformed parameter JSON: {e}") from e


def _params_arg(text: str | None) -> SatakeParams | None:
    if text is None:
        return None
    try:
        return SatakeParams.from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise UsageError(f"malformed parameter JSON: {e}") from e


def _emit_factors(factors, fmt: str) -> None:
    if fmt == "json":
        print(_dump({"degree": len(factors), "factors": [str(f) for f in factors]}))
    else:
        print("".join(f"({f})" for f in factors))


def cmd_lfactor(args) -> int:
    sub = args.lfactor_cmd
    if sub in ("spin", "standard"):
        params = _params_from(args)
        build = spin_polynomial if sub == "spin" else standard_polynomial
        _emit_factors(build(params), args.format or "text")
    elif sub == "hodge":
        print(_dump(hodge_spinor(args.genus, args.weight).to_json()))
    elif sub == "eisenstein":
        print(_dump(eisenstein_params(args.weight, args.genus).to_json()))
    elif sub == "ikeda":
        print(_dump(ikeda_params(args.weight, args.m, args.alpha).to_json()))
    elif sub == "merge":
        f, g = _params_arg(args.first), _params_arg(args.second)
        if f is None or g is None:
            data = _read_stdin_json()
            try:
                f, g = SatakeParams.from_json(data["f"]), SatakeParams.from_json(data["g"])
            except (KeyError, TypeError) as e:
                raise UsageError("merge expects {\"f\": params, \"g\": params} on standard input") from e
        print(_dump(lift_merge_params(f, g, args.allow_weight_mismatch).to_json()))
    return EXIT_OK


# parser ----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="heckeseries",
                                 description="Hecke generating series, Rankin convolutions and local L-factors.")
    sp = ap.add_subparsers(dest="command", required=True)

    s = sp.add_parser("series", help="closed form and leading coefficients of a Hecke series")
    s.add_argument("--genus", type=int, default=2)
    s.add_argument("--power", type=int, default=1, help="series of T(p^(m*delta)) (default 1)")
    s.add_argument("--terms", type=int, default=0, help="number of leading coefficients to print")
    s.add_argument("--format", choices=("text", "json", "latex"), default="text")
    s.set_defaults(func=cmd_series)

    v = sp.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    v.add_argument("--prefix-order", type=int, default=12)
    v.add_argument("--prime", type=int, default=None, help="substitute this prime for p in the heavy suites")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    lf = sp.add_parser("lfactor", help="Satake parameters, Euler factors and Hodge types")
    lsp = lf.add_subparsers(dest="lfactor_cmd", required=True)
    for name in ("spin", "standard"):
        c = lsp.add_parser(name, help=f"{name} Euler factor from Satake parameters (flags or JSON on stdin)")
        c.add_argument("--genus", type=int)
        c.add_argument("--weight")
        c.add_argument("--alphas", nargs="+", help="alpha_0 ... alpha_n, e.g. 1 'p^{k-2}' 'p^{k-1}'")
        c.add_argument("--format", choices=("text", "json"))
    c = lsp.add_parser("hodge", help="Hodge type of the spinor motive")
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--weight", required=True)
    c = lsp.add_parser("eisenstein", help="Satake parameters of the Siegel-Eisenstein series")
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--weight", required=True)
    c = lsp.add_parser("ikeda", help="Satake parameters of the Ikeda lift of genus 2m")
    c.add_argument("--weight", required=True, help="k, for a form of weight 2k")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--alpha", default="alpha")
    c = lsp.add_parser("merge", help="merge two genus-2m parameter sets into genus 4m")
    c.add_argument("--first", help="parameters of weight k as JSON")
    c.add_argument("--second", help="parameters of weight k-2m as JSON")
    c.add_argument("--allow-weight-mismatch", action="store_true")
    lf.set_defaults(func=cmd_lfactor)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return args.func(args)
    except (UsageError, HeckeSeriesError, ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

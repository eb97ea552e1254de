"""Named verification suites.  Each suite returns a list of checks; a report
bundles them with timing and the run configuration."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .arith import DEFAULT_VARS, MultiPoly, RationalFn, rf_equal, series_expand
from .deltaseries import delta_eval, delta_symbolic
from .hecke import (
    HeckeSeriesPoly, SatakeMap, functional_equation_check, newton_polygon, omega_series,
    parse_tensor, shimura_series,
)
from .lfactor import (
    HodgeType, LinExpr, LinearFactor, check_satake_constraint, eisenstein_params, factor_multiset,
    hodge_spinor, hodge_tensor, lift_merge_params, motive_weight, verify_conjecture_denominator,
    verify_ikeda_standard_factor,
)
from .rankin import verify_genus1_rankin, verify_power_series, verify_theorem21
from .rankin_hecke import TENSOR2, DerivedRS, rs_reference_diff, derive_RS, genus1_tensor_identity_check
from .reference_forms import (
    HODGE_SPINOR_GENUS2, HODGE_TENSOR_PRINTED, TOTAL_HECKE_DENOMINATOR, TOTAL_HECKE_EXPANDED,
    TOTAL_HECKE_GROUPED,
)
from .spherical import SphericalContext, andrianov_series_genus2, genus1_series, genus2_delta_form

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Check:
    id: str
    description: str
    status: str
    detail: object = None

    def to_json(self) -> dict:
        return {"id": self.id, "description": self.description, "status": self.status,
                "detail": self.detail}


def check(id: str, description: str, ok: bool, detail=None) -> Check:
    return Check(id, description, PASS if ok else FAIL, detail)


@dataclass
class VerifyConfig:
    prefix_order: int = 12
    prime: int | None = None

    def to_json(self) -> dict:
        return {"p_mode": "symbolic" if self.prime is None else f"numeric p={self.prime}",
                "prefix_order": self.prefix_order}


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: int = 0
    config: VerifyConfig = field(default_factory=VerifyConfig)

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "checks": [c.to_json() for c in self.checks],
                "elapsed_ms": self.elapsed_ms, "config": self.config.to_json()}

    def to_text(self) -> str:
        lines = [f"suite {self.suite} ({self.config.to_json()['p_mode']}, "
                 f"prefix order {self.config.prefix_order})"]
        for c in self.checks:
            lines.append(f"  [{c.status.upper():7}] {c.id}: {c.description}")
            if c.status == FAIL and c.detail is not None:
                lines.append(f"            {_brief(c.detail)}")
        n_fail = sum(c.status == FAIL for c in self.checks)
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} passed in {self.elapsed_ms} ms")
        return "\n".join(lines)


def _brief(detail, limit: int = 400) -> str:
    if isinstance(detail, dict) and "difference" in detail:
        detail = {"difference": detail["difference"], "alternative_equal": detail.get("alternative_equal")}
    text = str(detail)
    return text if len(text) <= limit else text[:limit] + " ..."


@lru_cache(maxsize=4)
def derived_rs(prime: int | None = None) -> DerivedRS:
    return derive_RS(prime=prime)


# suites ---------------------------------------------------------------------------

def suite_eq3(cfg: VerifyConfig) -> list[Check]:
    ctx = SphericalContext(2, "x")
    num, den = shimura_series(2)
    smap = SatakeMap(ctx)
    image = RationalFn.from_factors(omega_series(num, smap), [omega_series(den, smap)])
    return [check("eq3.identity", "spherical image of the genus-2 generator series equals the spinor closed form",
                  rf_equal(image, andrianov_series_genus2(ctx)))]


def _pullback_checks(genus: int) -> list[Check]:
    ctx = SphericalContext(genus, "x")
    smap = SatakeMap(ctx)
    closed = andrianov_series_genus2(ctx) if genus == 2 else genus1_series(ctx)
    num, den = shimura_series(genus)
    image = RationalFn.from_factors(omega_series(num, smap), [omega_series(den, smap)])
    out = [check(f"shimura-g{genus}.identity",
                 f"spherical image of the genus-{genus} generator series equals the closed form",
                 rf_equal(image, closed))]
    for label, poly, expected in (("numerator", closed.num, num), ("denominator", closed.den, den)):
        coeffs = poly.coeffs_in(ctx.series_var)
        zero = MultiPoly(ctx.vt)
        solved = [smap.inverse_bareiss(coeffs.get(i, zero), i) for i in range(max(coeffs) + 1)]
        sign = 1 if solved[0] == expected[0] else -1
        got = HeckeSeriesPoly([c * sign for c in solved])
        out.append(check(f"shimura-g{genus}.{label}",
                         f"inverse spherical map of the closed-form {label} recovers the generator coefficients",
                         got == HeckeSeriesPoly(expected), [str(c) for c in got.coeffs]))
    return out


def suite_shimura_g1(cfg: VerifyConfig) -> list[Check]:
    return _pullback_checks(1)


def suite_shimura_g2(cfg: VerifyConfig) -> list[Check]:
    return _pullback_checks(2)


def suite_formula1(cfg: VerifyConfig, top: int = 20) -> list[Check]:
    ctx = SphericalContext(2, "x")
    d = genus2_delta_form(ctx)
    coeffs = series_expand(andrianov_series_genus2(ctx), ctx.series_var, top)
    bad = [k for k in range(top + 1) if not rf_equal(delta_eval(d, k), coeffs[k])]
    vt = DEFAULT_VARS.extend("U0", "U1", "U2")
    sym = delta_symbolic(d, {"x0": "U0", "x1": "U1", "x2": "U2"}, vt)
    dens = [MultiPoly.parse(s, vt) for s in TOTAL_HECKE_DENOMINATOR]
    out = [check("formula1.series", f"four-term form agrees with the series coefficients, delta = 0..{top}",
                 not bad, {"mismatched_delta": bad})]
    for name, text in (("expanded", TOTAL_HECKE_EXPANDED), ("grouped", TOTAL_HECKE_GROUPED)):
        printed = RationalFn.from_factors(MultiPoly.parse(text, vt), dens)
        out.append(check(f"formula1.{name}", f"symbolic-delta form equals the printed {name} display",
                         rf_equal(sym, printed)))
    return out


def suite_rankin2(cfg: VerifyConfig) -> list[Check]:
    r = verify_theorem21(prefix_order=cfg.prefix_order)
    d = r.degree12_properties
    return [
        check("rankin2.prefix", f"closed form matches termwise products of the series to order {cfg.prefix_order}",
              r.prefix_agrees),
        check("rankin2.transcription", "closed form equals the printed sixteen-term sum (x1-x2 correction applied)",
              r.transcription_equal,
              {"term_mismatches": r.term_mismatches,
               "equal_after_sign_fix": r.transcription_equal_after_sign_fix,
               "raw_transcription": r.raw_transcription_note}),
        check("rankin2.denominator", "reduced denominator is the sixteen-factor product", r.denominator_is_16_product),
        check("rankin2.quadratic", "numerator divisible by 1 - x0^2 y0^2 x1 y1 x2 y2 X^2", r.quadratic_factor_divides),
        check("rankin2.constant", "degree-12 factor has constant term 1", d.constant_is_one),
        check("rankin2.deg1", "degree-12 factor has no X^1 term", d.deg1_zero),
        check("rankin2.deg11", "degree-12 factor has no X^11 term", d.deg11_zero),
        check("rankin2.leading", "leading term is x0^12 y0^12 x1^6 x2^6 y1^6 y2^6 X^12 / p^2", d.leading_term_matches),
    ]


def suite_rankin1(cfg: VerifyConfig) -> list[Check]:
    r = verify_genus1_rankin(prefix_order=cfg.prefix_order)
    t = genus1_tensor_identity_check()
    return [
        check("rankin1.closed", "genus-1 Rankin closed form equals the printed fraction", r["closed_form_equal"]),
        check("rankin1.terms", "four-term form matches the printed terms", r["four_term_form_equal"],
              r["term_mismatches"]),
        check("rankin1.prefix", f"series agrees with termwise products to order {cfg.prefix_order}",
              r["prefix_agrees"]),
        check("rankin1.generators", "printed generator form maps to the spherical closed form",
              t["spherical_identity"]),
        check("rankin1.denominator", "pulled-back denominator coefficients equal the printed ones",
              t["denominator_coefficients_match"], t["derived_denominator"]),
        check("rankin1.numerator", "pulled-back numerator equals 1 - p^2 P⊗P X^2",
              t["numerator_coefficients_match"], t["derived_numerator"]),
    ]


def _power_checks(m: int, name: str) -> list[Check]:
    r = verify_power_series(m=m)
    return [
        check(f"{name}.display", f"power-{m} closed form equals the printed display", r["display_equal"],
              {k: r[k] for k in ("constant_ratio", "residual_after_constant_match", "residual_terms")}),
        check(f"{name}.prefix", f"closed form expands to T(p^{m} delta) images", r["prefix_agrees"]),
    ]


def suite_symsquare(cfg: VerifyConfig) -> list[Check]:
    return _power_checks(2, "symsquare")


def suite_cubic(cfg: VerifyConfig) -> list[Check]:
    return _power_checks(3, "cubic")


def suite_theorem31(cfg: VerifyConfig) -> list[Check]:
    d = derived_rs(cfg.prime)
    p = cfg.prime

    def expect(text: str):
        e = parse_tensor(TENSOR2, text)
        return e if p is None else e.subs_p(p)

    return [
        check("theorem31.identity", "spherical image of (1 - p^6 P⊗P X^2) R / S equals the Rankin series",
              d.identity_holds, d.details),
        check("theorem31.s1", "s_1 = -T⊗T", d.S[1] == -expect("T⊗T"), str(d.S[1])),
        check("theorem31.r1", "r_1 = 0", d.R[1].is_zero(), str(d.R[1])),
        check("theorem31.r11", "r_11 = 0", d.R[11].is_zero(), str(d.R[11])),
        check("theorem31.r12", "r_12 = p^34 P^6⊗P^6", d.R.degree == 12 and d.R[12] == expect("p^34 P^6⊗P^6"),
              str(d.R[12])),
        check("theorem31.s16", "s_16 = (p^6 P⊗P)^8", d.S.degree == 16 and d.S[16] == expect("p^6 P⊗P") ** 8,
              str(d.S[16])),
    ]


def suite_funceq(cfg: VerifyConfig) -> list[Check]:
    d = derived_rs(cfg.prime)
    flags = functional_equation_check(d.S, cfg.prime)
    return [check(f"funceq.s{16 - i}", f"s_{16 - i} = (p^6 P⊗P)^{8 - i} s_{i}", ok) for i, ok in enumerate(flags)]


def suite_appendix_diff(cfg: VerifyConfig) -> list[Check]:
    out = []
    for row in rs_reference_diff(derived_rs(cfg.prime)):
        desc = f"derived {row['coefficient']} equals the printed coefficient"
        if "suspect" in row:
            desc += f" (suspect: {row['suspect']})"
        out.append(check(f"appendix.{row['coefficient']}", desc, row["equal"], row))
    return out


def suite_newton(cfg: VerifyConfig) -> list[Check]:
    d = derived_rs(cfg.prime)
    if cfg.prime is None:
        nr, ns = newton_polygon(d.R), newton_polygon(d.S)
    else:
        nr, ns = newton_polygon(d.R, "p-adic", cfg.prime), newton_polygon(d.S, "p-adic", cfg.prime)
    return [
        check("newton.R", "Newton polygon of R ends at (12, 34)", nr.vertices[-1] == (12, 34), nr.to_json()),
        check("newton.S", "Newton polygon of S ends at (16, 48)", ns.vertices[-1] == (16, 48), ns.to_json()),
        check("newton.slopes", "all slopes are integers", nr.slopes_integral() and ns.slopes_integral()),
    ]


def suite_conjecture_denominator(cfg: VerifyConfig) -> list[Check]:
    good = verify_conjecture_denominator()
    bad = verify_conjecture_denominator({"u0": "x0*y0", "u1": "x1", "u2": "x2", "u3": "x1", "u4": "y2"})
    return [
        check("conjecture.denominator", "genus-4 spinor denominator under u -> (x0 y0, x1, x2, y1, y2) "
              "equals the sixteen-factor Rankin denominator", good["equal"], good),
        check("conjecture.negative-control", "substituting u3 -> x1 breaks the equality", not bad["equal"], bad),
    ]


def suite_eisenstein(cfg: VerifyConfig) -> list[Check]:
    out = []
    k = LinExpr.symbol("k")
    for m in (1, 2, 3):
        merged = lift_merge_params(eisenstein_params(k, 2 * m), eisenstein_params(k - 2 * m, 2 * m))
        target = eisenstein_params(k, 4 * m)
        gammas = factor_multiset(LinearFactor(g) for g in merged.alphas[1:])
        expected = factor_multiset(LinearFactor(g) for g in target.alphas[1:])
        out.append(check(f"eisenstein.m{m}.gammas", f"merged parameters are p^(k-{4 * m}+i-1), i = 1..{4 * m}",
                         gammas == expected and merged.alphas[0] == target.alphas[0], merged.to_json()))
        out.append(check(f"eisenstein.m{m}.constraint",
                         f"merged parameters satisfy the constraint p^({motive_weight(4 * m, k)})",
                         check_satake_constraint(merged)))
    return out


def suite_ikeda_standard(cfg: VerifyConfig) -> list[Check]:
    out = []
    for m in (1, 2):
        r = verify_ikeda_standard_factor("k", m)
        ok = r["degree_ok"] and r["roots_match"] and r["polynomial_identity"] and r["alpha_inversion_invariant"]
        out.append(check(f"ikeda.m{m}", f"standard factor of the genus-{2 * m} lift splits into "
                         f"(1 - X) and {2 * m} shifted Hecke quadratics", ok, r))
    return out


def suite_hodge_tensor(cfg: VerifyConfig) -> list[Check]:
    got = hodge_tensor(hodge_spinor(2, "k"), hodge_spinor(2, "l"))
    printed = HodgeType([(a, b) for a, b, _ in HODGE_TENSOR_PRINTED], [t for *_, t in HODGE_TENSOR_PRINTED])
    spinor = hodge_spinor(2, "k")
    return [
        check("hodge.spinor", "genus-2 spinor Hodge type is the printed four pairs",
              spinor.multiset() == HodgeType(HODGE_SPINOR_GENUS2).multiset(), spinor.to_json()),
        check("hodge.tensor", "tensor Hodge type equals the printed sixteen pairs with tagged diagonals",
              got.multiset() == printed.multiset() and len(got) == 16, got.to_json()),
        check("hodge.weight", "every pair sums to 2k+2l-6", got.sums() == {LinExpr.parse("2k+2l-6")}),
    ]


SUITES: dict[str, Callable[[VerifyConfig], list[Check]]] = {
    "eq3": suite_eq3,
    "formula1": suite_formula1,
    "rankin2": suite_rankin2,
    "rankin1": suite_rankin1,
    "symsquare": suite_symsquare,
    "cubic": suite_cubic,
    "shimura-g1": suite_shimura_g1,
    "shimura-g2": suite_shimura_g2,
    "theorem31": suite_theorem31,
    "funceq": suite_funceq,
    "appendix-diff": suite_appendix_diff,
    "newton": suite_newton,
    "conjecture-denominator": suite_conjecture_denominator,
    "eisenstein": suite_eisenstein,
    "ikeda-standard": suite_ikeda_standard,
    "hodge-tensor": suite_hodge_tensor,
}


def run_suite(name: str, cfg: VerifyConfig | None = None) -> VerificationReport:
    cfg = cfg or VerifyConfig()
    if name != "all" and name not in SUITES:
        raise KeyError(name)
    start = time.perf_counter()
    checks: list[Check] = []
    for suite in (SUITES if name == "all" else [name]):
        checks.extend(SUITES[suite](cfg))
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(name, checks, elapsed, cfg)


__all__ = ["SUITES", "run_suite", "VerificationReport", "VerifyConfig", "Check", "derived_rs"]

"""Genus-2 and genus-1 Rankin convolution series in spherical variables,
with structural checks of the closed forms."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .arith import DEFAULT_VARS, MultiPoly, RationalFn, normalize_factor, poly_exact_div, \
    rf_equal, rf_reduce_known_factors, series_expand
from .deltaseries import DeltaSeries, delta_eval, delta_product, linear_factor_base, resum
from .errors import NotDivisible
from .reference_forms import (
    CUBIC, GENUS1_RANKIN_CLOSED, GENUS1_RANKIN_TERMS, RANKIN_DENOMINATOR,
    RANKIN_LEADING_TERM, RANKIN_QUADRATIC_FACTOR, RANKIN_TERMS, RANKIN_TYPO, SYMMETRIC_SQUARE,
)
from .spherical import (
    SphericalContext, andrianov_series_genus2, genus1_delta_form, genus1_series,
    genus2_delta_form, power_series_closed_form,
)

# Factors free of X that appear in the unreduced denominators.
KNOWN_CANCELLING = ["1 - x1", "1 - x2", "x1 - x2", "1 - x1*x2",
                    "1 - y1", "1 - y2", "y1 - y2", "1 - y1*y2", "p"]


def default_pair(genus: int = 2) -> tuple[SphericalContext, SphericalContext]:
    return SphericalContext(genus, "x"), SphericalContext(genus, "y")


def _parse(text: str, vt=DEFAULT_VARS) -> MultiPoly:
    return MultiPoly.parse(text, vt)


def rankin_delta_form(ctxs) -> DeltaSeries:
    cx, cy = ctxs
    if cx.genus == 1:
        return delta_product(genus1_delta_form(cx), genus1_delta_form(cy))
    return delta_product(genus2_delta_form(cx), genus2_delta_form(cy))


def rankin_closed_form(ctxs=None) -> RationalFn:
    """``sum_delta Omega_x(T(p^delta)) Omega_y(T(p^delta)) X^delta`` as one
    fraction over the sixteen pole factors and the X-free factors."""
    ctxs = ctxs or default_pair()
    return resum(rankin_delta_form(ctxs), ctxs[0].series_var)


def reduced_rankin(ctxs=None) -> RationalFn:
    ctxs = ctxs or default_pair()
    vt = ctxs[0].vt
    return rf_reduce_known_factors(rankin_closed_form(ctxs), [_parse(s, vt) for s in KNOWN_CANCELLING])


def _factor_multiset(polys) -> dict[MultiPoly, int]:
    out: dict[MultiPoly, int] = {}
    for f in polys:
        _, _, g = normalize_factor(f)
        out[g] = out.get(g, 0) + 1
    return out


def transcribed_term(entry, vt=DEFAULT_VARS) -> tuple[int, RationalFn]:
    """``(pole base key, coefficient)`` for one printed Rankin term.  Raises
    ZeroDivisionError when a printed denominator factor is identically zero."""
    sign, num, den = entry
    *rest, pole = [_parse(s, vt) for s in den]
    found = linear_factor_base(pole, "X")
    if found is None:
        raise ValueError(f"last factor {pole} is not a pole factor")
    unit, base = found
    coef = RationalFn.from_factors(_parse(num, vt) * sign, rest) / unit
    return base, coef


def corrected_rankin_terms() -> list:
    idx, bad, good = RANKIN_TYPO
    terms = list(RANKIN_TERMS)
    sign, num, den = terms[idx]
    terms[idx] = (sign, num, [good if f == bad else f for f in den])
    return terms


@dataclass
class Degree12Properties:
    constant_is_one: bool = False
    deg1_zero: bool = False
    deg11_zero: bool = False
    leading_term_matches: bool = False


@dataclass
class RankinReport:
    identity_holds: bool = False
    denominator_is_16_product: bool = False
    quadratic_factor_divides: bool = False
    degree12_properties: Degree12Properties = field(default_factory=Degree12Properties)
    series_prefix_checked_to: int = -1
    prefix_agrees: bool = False
    transcription_equal: bool = False
    transcription_equal_after_sign_fix: bool = False
    term_mismatches: list = field(default_factory=list)
    raw_transcription_note: str = ""

    @property
    def all_pass(self) -> bool:
        d = self.degree12_properties
        return (self.identity_holds and self.denominator_is_16_product and self.quadratic_factor_divides
                and d.constant_is_one and d.deg1_zero and d.deg11_zero and d.leading_term_matches)

    def to_json(self) -> dict:
        return asdict(self)


def compare_terms_by_pole(derived: DeltaSeries, terms, vt=DEFAULT_VARS) -> list[dict]:
    """Per printed term: does its coefficient match the derived one at the same pole?"""
    out = []
    for i, entry in enumerate(terms):
        try:
            base, coef = transcribed_term(entry, vt)
        except ZeroDivisionError:
            out.append({"term": i + 1, "status": "zero denominator"})
            continue
        if base not in derived._terms:
            out.append({"term": i + 1, "status": "pole not in derived form"})
        elif not rf_equal(derived._terms[base], coef):
            status = "opposite sign" if rf_equal(derived._terms[base], -coef) else "differs"
            out.append({"term": i + 1, "status": status})
    return out


def transcribed_sum(terms, vt=DEFAULT_VARS) -> RationalFn:
    parts = []
    for entry in terms:
        base, coef = transcribed_term(entry, vt)
        parts.append(coef * RationalFn.from_factors(MultiPoly.one(vt), [_pole(base, vt)]))
    return RationalFn.sum(parts)


def rankin_prefix_check(closed: RationalFn, ctxs, order: int) -> bool:
    """Compare series coefficients with products of the single-genus series
    coefficients, ``delta = 0..order``."""
    cx, cy = ctxs
    single = andrianov_series_genus2 if cx.genus == 2 else genus1_series
    ax = series_expand(single(cx), cx.series_var, order)
    ay = series_expand(single(cy), cy.series_var, order)
    got = series_expand(closed, cx.series_var, order)
    return all(got[d] == ax[d] * ay[d] for d in range(order + 1))


def verify_theorem21(ctxs=None, prefix_order: int = 12) -> RankinReport:
    ctxs = ctxs or default_pair()
    if prefix_order < 12:
        raise ValueError("prefix order must be at least 12")
    vt = ctxs[0].vt
    report = RankinReport()
    derived = rankin_delta_form(ctxs)
    closed = resum(derived)

    terms = corrected_rankin_terms()
    report.term_mismatches = compare_terms_by_pole(derived, terms, vt)
    report.transcription_equal = rf_equal(closed, transcribed_sum(terms, vt))
    flipped = {m["term"] - 1 for m in report.term_mismatches if m["status"] == "opposite sign"}
    if flipped:
        fixed = [(-t[0],) + tuple(t[1:]) if i in flipped else t for i, t in enumerate(terms)]
        report.transcription_equal_after_sign_fix = rf_equal(closed, transcribed_sum(fixed, vt))
    else:
        report.transcription_equal_after_sign_fix = report.transcription_equal
    raw = compare_terms_by_pole(derived, RANKIN_TERMS, vt)
    report.raw_transcription_note = "; ".join(f"term {r['term']}: {r['status']}" for r in raw)

    reduced = rf_reduce_known_factors(closed, [_parse(s, vt) for s in KNOWN_CANCELLING])
    expected = _factor_multiset(_parse(s, vt) for s in RANKIN_DENOMINATOR)
    report.denominator_is_16_product = reduced.factors == expected

    report.series_prefix_checked_to = prefix_order
    report.prefix_agrees = rankin_prefix_check(reduced, ctxs, prefix_order)
    report.identity_holds = report.transcription_equal and report.prefix_agrees

    # numerator over the denominator written as the product of (1 - m X)
    sign = 1
    for s in RANKIN_DENOMINATOR:
        sign *= normalize_factor(_parse(s, vt))[0]
    numerator = reduced.num.scale(sign)
    try:
        quotient = poly_exact_div(numerator, _parse(RANKIN_QUADRATIC_FACTOR, vt))
    except NotDivisible:
        return report
    report.quadratic_factor_divides = True
    coeffs = quotient.coeffs_in(ctxs[0].series_var)
    lead = _parse(RANKIN_LEADING_TERM, vt)
    report.degree12_properties = Degree12Properties(
        constant_is_one=coeffs.get(0) == MultiPoly.one(vt),
        deg1_zero=1 not in coeffs,
        deg11_zero=11 not in coeffs,
        leading_term_matches=quotient.degree_in(ctxs[0].series_var) == 12
        and coeffs[12].shift(12 * vt.unit("X")) == lead,
    )
    return report


def rankin_numerator_quotient(ctxs=None) -> MultiPoly:
    """The degree-12 factor of the reduced numerator."""
    ctxs = ctxs or default_pair()
    vt = ctxs[0].vt
    reduced = reduced_rankin(ctxs)
    sign = 1
    for s in RANKIN_DENOMINATOR:
        sign *= normalize_factor(_parse(s, vt))[0]
    return poly_exact_div(reduced.num.scale(sign), _parse(RANKIN_QUADRATIC_FACTOR, vt))


def _pole(base: int, vt) -> MultiPoly:
    return MultiPoly(vt, {0: 1, base + vt.unit("X"): -1})


def verify_genus1_rankin(ctxs=None, prefix_order: int = 12) -> dict:
    ctxs = ctxs or default_pair(1)
    vt = ctxs[0].vt
    derived = rankin_delta_form(ctxs)
    closed = resum(derived)
    num, den = GENUS1_RANKIN_CLOSED
    printed_closed = RationalFn.from_factors(_parse(num, vt), [_parse(s, vt) for s in den])
    mismatches = compare_terms_by_pole(derived, GENUS1_RANKIN_TERMS, vt)
    return {
        "closed_form_equal": rf_equal(closed, printed_closed),
        "four_term_form_equal": not mismatches and len(derived) == 4,
        "term_mismatches": mismatches,
        "prefix_agrees": rankin_prefix_check(closed, ctxs, prefix_order),
        "constant_term_is_one": series_expand(closed, "X", 0)[0] == MultiPoly.one(vt),
    }


def verify_power_series(ctx: SphericalContext | None = None, m: int = 2, prefix_order: int = 6) -> dict:
    """Compare the power-substituted series with the printed display."""
    ctx = ctx or SphericalContext(2, "x")
    if m not in (2, 3):
        raise ValueError("displays exist for m = 2 and m = 3 only")
    vt = ctx.vt
    closed = power_series_closed_form(ctx, m)
    num, den = SYMMETRIC_SQUARE if m == 2 else CUBIC
    printed = RationalFn.from_factors(_parse(num, vt), [_parse(s, vt) for s in den])
    base = genus2_delta_form(ctx)
    got = series_expand(closed, ctx.series_var, prefix_order)
    prefix = all(rf_equal(delta_eval(base, m * d), got[d]) for d in range(prefix_order + 1))
    # numerators over the printed denominator; the residual localizes a mismatch
    derived_num = (closed * RationalFn(printed.den)).to_poly()
    printed_num = printed.num
    sign = Fraction(derived_num.constant_term()) / Fraction(printed_num.constant_term()) \
        if printed_num.constant_term() else Fraction(1)
    residual = derived_num - printed_num.scale(sign)
    return {
        "m": m,
        "display_equal": rf_equal(closed, printed),
        "prefix_agrees": prefix,
        "constant_ratio": str(sign),
        "residual_after_constant_match": str(residual),
        "residual_terms": len(residual),
    }


__all__ = [
    "rankin_closed_form", "rankin_delta_form", "reduced_rankin", "verify_theorem21",
    "verify_genus1_rankin", "verify_power_series", "RankinReport", "Degree12Properties",
    "compare_terms_by_pole", "rankin_numerator_quotient", "default_pair",
]

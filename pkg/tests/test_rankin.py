import pytest

from heckeseries.arith import DEFAULT_VARS, MultiPoly, normalize_factor, poly_substitute, rf_equal, series_expand
from heckeseries.deltaseries import delta_eval
from heckeseries.rankin import (
    compare_terms_by_pole, corrected_rankin_terms, default_pair, rankin_delta_form, rankin_numerator_quotient,
    reduced_rankin, transcribed_term, verify_genus1_rankin, verify_power_series,
)
from heckeseries.rankin_hecke import genus1_tensor_identity_check, rankin_denominator_factors
from heckeseries.reference_forms import RANKIN_DENOMINATOR, RANKIN_TERMS

P = MultiPoly.parse


def test_genus1_rankin():
    r = verify_genus1_rankin()
    assert r["closed_form_equal"] and r["four_term_form_equal"]
    assert r["prefix_agrees"] and r["constant_term_is_one"]


def test_genus1_generator_identity():
    t = genus1_tensor_identity_check()
    assert t["spherical_identity"]
    assert t["denominator_coefficients_match"] and t["numerator_coefficients_match"]


def test_sixteen_pole_bases():
    bases = rankin_delta_form(default_pair()).bases()
    assert len(bases) == 16
    names = {str(b) for b in bases}
    assert "x0*y0" in names and "x0*x1*x2*y0*y1*y2" in names


def test_pole_factors_match_printed_denominator():
    got = {normalize_factor(f)[2] for f in rankin_denominator_factors(default_pair())}
    assert got == {normalize_factor(P(s))[2] for s in RANKIN_DENOMINATOR}


def test_product_coefficient_at_simplest_pole():
    d = rankin_delta_form(default_pair())
    base, coef = transcribed_term(corrected_rankin_terms()[0])
    assert rf_equal(d._terms[base], coef)


def test_closed_form_symmetric_in_x_and_y():
    f = reduced_rankin()
    swap = {f"x{i}": P(f"y{i}") for i in range(3)} | {f"y{i}": P(f"x{i}") for i in range(3)}
    g = type(f).from_factors(poly_substitute(f.num, swap), [poly_substitute(h, swap) for h in f.factor_list()])
    assert rf_equal(f, g)


def test_printed_terms_by_pole():
    derived = rankin_delta_form(default_pair())
    raw = {r["term"]: r["status"] for r in compare_terms_by_pole(derived, RANKIN_TERMS)}
    assert raw.get(3) == "zero denominator"
    fixed = {r["term"]: r["status"] for r in compare_terms_by_pole(derived, corrected_rankin_terms())}
    assert fixed == {10: "opposite sign"}


def test_rankin_report_structure(rankin_report):
    r = rankin_report
    assert r.prefix_agrees and r.denominator_is_16_product and r.quadratic_factor_divides
    assert r.transcription_equal_after_sign_fix


def test_degree12_quotient():
    q = rankin_numerator_quotient()
    c = q.coeffs_in("X")
    assert max(c) == 12 and 1 not in c and 11 not in c
    assert c[0] == MultiPoly.one(DEFAULT_VARS)


def test_prefix_order_below_twelve_rejected():
    from heckeseries.rankin import verify_theorem21
    with pytest.raises(ValueError):
        verify_theorem21(prefix_order=5)


def test_symmetric_square_display():
    r = verify_power_series(m=2)
    assert r["display_equal"] and r["prefix_agrees"]


def test_cubic_prefix_independent_of_display():
    r = verify_power_series(m=3)
    assert r["prefix_agrees"]


def test_power_outside_displays_rejected():
    with pytest.raises(ValueError):
        verify_power_series(m=4)


def test_rankin_coefficient_is_product_at_small_delta():
    cx, cy = default_pair()
    d = rankin_delta_form((cx, cy))
    coeffs = series_expand(reduced_rankin(), "X", 2)
    for k in range(3):
        assert rf_equal(delta_eval(d, k), coeffs[k])

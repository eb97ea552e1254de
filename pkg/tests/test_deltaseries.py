import pytest
from hypothesis import given, strategies as st

from heckeseries.arith import DEFAULT_VARS, Monomial, MultiPoly, RationalFn, VarTable, rf_equal, series_expand
from heckeseries.deltaseries import (
    DeltaSeries, delta_eval, delta_power_substitute, delta_product, delta_symbolic, partial_fractions, resum,
)
from heckeseries.errors import NotLinearFactorForm, RepeatedBase
from heckeseries.spherical import SphericalContext, andrianov_series_genus2, genus1_delta_form, genus2_delta_form

VT = VarTable(("a", "b", "c", "X"))
P = lambda s, vt=VT: MultiPoly.parse(s, vt)  # noqa: E731


def rf(num, *dens, vt=VT):
    return RationalFn.from_factors(P(num, vt), [P(d, vt) for d in dens])


def test_two_pole_partial_fractions():
    d = partial_fractions(rf("1", "1 - a*X", "1 - b*X"))
    assert rf_equal(d.coefficient({"a": 1}), RationalFn(P("a"), P("a - b")))
    assert rf_equal(d.coefficient({"b": 1}), RationalFn(P("-b"), P("a - b")))
    coeffs = series_expand(rf("1", "1 - a*X", "1 - b*X"), "X", 9)
    assert all(rf_equal(delta_eval(d, k), coeffs[k]) for k in range(10))


def test_single_pole():
    d = partial_fractions(rf("1", "1 - a*X"))
    assert len(d) == 1 and rf_equal(d.coefficient({"a": 1}), MultiPoly.one(VT))


def test_repeated_base_rejected():
    with pytest.raises(RepeatedBase):
        partial_fractions(rf("1", "1 - a*X", "1 - a*X"))


def test_improper_fraction_rejected():
    with pytest.raises(NotLinearFactorForm):
        partial_fractions(rf("X^2", "1 - a*X", "1 - b*X"))


def test_resum_single_term():
    d = DeltaSeries(VT, [(RationalFn(P("1")), Monomial.of(VT, a=1))])
    assert rf_equal(resum(d), rf("1", "1 - a*X"))


def test_genus2_partial_fractions():
    ctx = SphericalContext(2, "x")
    d = genus2_delta_form(ctx)
    assert sorted(str(b) for b in d.bases()) == ["x0", "x0*x1", "x0*x1*x2", "x0*x2"]
    want = RationalFn.from_factors(MultiPoly.parse("p - x1*x2"),
                                   [MultiPoly.parse(s) for s in ("p", "1 - x1", "1 - x2", "1 - x1*x2")])
    assert rf_equal(d.coefficient({"x0": 1}), want)
    assert rf_equal(resum(d), andrianov_series_genus2(ctx))


def test_delta_eval_low_degrees():
    d = genus2_delta_form(SphericalContext(2, "x"))
    assert rf_equal(delta_eval(d, 0), MultiPoly.one())
    assert rf_equal(delta_eval(d, 1), MultiPoly.parse("x0*(1 + x1)*(1 + x2)"))


def test_delta_eval_matches_expansion_to_20():
    ctx = SphericalContext(2, "x")
    d = genus2_delta_form(ctx)
    coeffs = series_expand(andrianov_series_genus2(ctx), "X", 20)
    assert all(rf_equal(delta_eval(d, k), coeffs[k]) for k in range(21))


def test_product_of_single_terms():
    a = DeltaSeries(VT, [(RationalFn(P("1")), Monomial.of(VT, a=1))])
    b = DeltaSeries(VT, [(RationalFn(P("1")), Monomial.of(VT, b=1))])
    prod = delta_product(a, b)
    assert [str(m) for m in prod.bases()] == ["a*b"]


def test_genus1_product_has_four_bases():
    d = delta_product(genus1_delta_form(SphericalContext(1, "x")), genus1_delta_form(SphericalContext(1, "y")))
    assert sorted(str(b) for b in d.bases()) == sorted(["x0*y0", "x0*x1*y0", "x0*y0*y1", "x0*x1*y0*y1"])


def test_power_one_is_identity():
    d = genus2_delta_form(SphericalContext(2, "x"))
    assert delta_power_substitute(d, 1).equals(d)


def test_power_must_be_positive():
    with pytest.raises(ValueError):
        delta_power_substitute(genus2_delta_form(SphericalContext(2, "x")), 0)


@given(st.integers(0, 8), st.integers(1, 3))
def test_power_commutes_with_eval(delta, m):
    d = genus2_delta_form(SphericalContext(2, "x"))
    assert rf_equal(delta_eval(delta_power_substitute(d, m), delta), delta_eval(d, m * delta))


@given(st.integers(0, 6))
def test_product_commutes_with_eval(delta):
    a = genus1_delta_form(SphericalContext(1, "x"))
    b = genus1_delta_form(SphericalContext(1, "y"))
    assert rf_equal(delta_eval(delta_product(a, b), delta), delta_eval(a, delta) * delta_eval(b, delta))


@given(st.lists(st.sampled_from(["a", "b", "c", "a*b", "a*c", "b*c", "a*b*c"]), min_size=1, max_size=4, unique=True),
       st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_round_trip(bases, num_coeffs):
    num = sum((MultiPoly.const(c, VT) * MultiPoly.var("X", VT) ** i
               for i, c in enumerate(num_coeffs[:len(bases)])), MultiPoly(VT))
    f = RationalFn.from_factors(num, [P(f"1 - {m}*X") for m in bases])
    d = partial_fractions(f)
    assert rf_equal(resum(d), f)
    coeffs = series_expand(f, "X", 5)
    assert all(rf_equal(delta_eval(d, k), coeffs[k]) for k in range(6))


def test_symbolic_delta_matches_evaluation():
    d = genus2_delta_form(SphericalContext(2, "x"))
    vt = DEFAULT_VARS.extend("U0", "U1", "U2")
    sym = delta_symbolic(d, {"x0": "U0", "x1": "U1", "x2": "U2"}, vt)
    for k in (0, 1, 3):
        at_k = sym.subs({f"U{i}": MultiPoly.monomial({f"x{i}": k}, 1, vt) for i in range(3)})
        assert rf_equal(at_k, delta_eval(d, k).to_vartable(vt))


def test_json_lists_terms_in_canonical_order():
    d = genus2_delta_form(SphericalContext(2, "x"))
    assert [t["base"] for t in d.to_json()["terms"]] == [
        {"x0": 1}, {"x0": 1, "x2": 1}, {"x0": 1, "x1": 1}, {"x0": 1, "x1": 1, "x2": 1}]

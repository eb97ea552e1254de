from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckeseries.arith import (
    DEFAULT_VARS, Monomial, MultiPoly, RationalFn, VarTable, normalize_factor, poly_add,
    poly_exact_div, poly_mul, poly_product, poly_substitute, rf_arith, rf_equal,
    rf_reduce_known_factors, series_expand,
)
from heckeseries.errors import (
    DenominatorNotUnitAtOrigin, MismatchedVarTable, NonUnitBindingForInvertedVariable, NotDivisible,
)
from heckeseries.spherical import SphericalContext, andrianov_series_genus2, spinor_denominator

P = lambda s: MultiPoly.parse(s)  # noqa: E731

SMALL = VarTable(("p", "x1", "x2"))


@st.composite
def polys(draw, laurent=True, max_terms=4):
    lo = -2 if laurent else 0
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exps = tuple(draw(st.integers(lo, 3)) for _ in SMALL.names)
        terms[SMALL.encode(exps)] = draw(st.integers(-3, 3).filter(bool))
    return MultiPoly(SMALL, terms)


nonzero = polys().filter(lambda f: not f.is_zero())


# VarTable and monomials ------------------------------------------------------------

def test_vartable_rejects_duplicates():
    with pytest.raises(ValueError):
        VarTable(("x", "x"))


def test_default_order_starts_with_p():
    assert DEFAULT_VARS.names[:8] == ("p", "x0", "x1", "x2", "y0", "y1", "y2", "X")


@given(st.lists(st.integers(-50, 50), min_size=3, max_size=3))
def test_encode_decode_roundtrip(exps):
    assert SMALL.decode(SMALL.encode(exps)) == tuple(exps)


@given(st.lists(st.integers(-9, 9), min_size=3, max_size=3), st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_key_addition_multiplies_monomials(a, b):
    ka, kb = SMALL.encode(a), SMALL.encode(b)
    assert SMALL.decode(ka + kb) == tuple(x + y for x, y in zip(a, b))


def test_monomial_inverse():
    m = Monomial.of(DEFAULT_VARS, x1=2, p=-1)
    assert (m * m.inverse()).is_one()
    assert m.exponents == {"p": -1, "x1": 2}


# addition and multiplication ------------------------------------------------------------

def test_add_cancels():
    assert poly_add(P("1 - x1"), P("x1")) == MultiPoly.one()


def test_add_zero_identity():
    f = P("x0*x1 - 3*p")
    assert poly_add(MultiPoly.zero(), f) == f


def test_like_terms_merge():
    assert poly_add(P("p*x1"), P("x1")) == P("(p + 1)*x1")


def test_difference_of_squares():
    assert poly_mul(P("1 - x1"), P("1 + x1")) == P("1 - x1^2")


def test_laurent_cancellation():
    assert poly_mul(P("x1^-1"), P("x1")) == MultiPoly.one()


def test_spinor_product_x_coefficient():
    prod = poly_product(spinor_denominator(2))
    assert prod.coefficient("X", 1) == -P("x0*(1 + x1)*(1 + x2)")


def test_mismatched_tables():
    with pytest.raises(MismatchedVarTable):
        MultiPoly.var("x1", SMALL) + MultiPoly.var("x1", DEFAULT_VARS)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a
    assert a - a == MultiPoly(SMALL)


@given(polys())
def test_no_zero_coefficients_stored(a):
    assert all(c != 0 for _, c in a.items())


def test_canonical_order_is_graded():
    keys = P("1 + x1 + x1^2*x2 + p").sorted_keys()
    degrees = [DEFAULT_VARS.degree(k) for k in keys]
    assert degrees == sorted(degrees, reverse=True)


def test_json_shape():
    data = P("3*x1^2*p^-1").to_json()
    assert data["terms"] == [{"m": {"p": -1, "x1": 2}, "n": "3", "d": "1"}]
    assert MultiPoly.from_json(data) == P("3*x1^2*p^-1")


# division and substitution ----------------------------------------------------------------

def test_exact_division():
    assert poly_exact_div(P("1 - x1^2*x2^2"), P("1 - x1*x2")) == P("1 + x1*x2")


def test_not_divisible():
    with pytest.raises(NotDivisible):
        poly_exact_div(P("1 - x1^2"), P("1 - x2"))


@given(polys(), nonzero)
def test_division_roundtrip(a, b):
    assert poly_exact_div(a * b, b) == a


def test_substitute_monomial():
    assert poly_substitute(P("x0^2*x1"), {"x0": P("x0*y0")}) == P("x0^2*y0^2*x1")


def test_substitute_identity():
    f = P("x0 + p*x1^-1")
    assert poly_substitute(f, {"x0": P("x0"), "x1": P("x1")}) == f


def test_substitute_non_unit_into_inverse():
    with pytest.raises(NonUnitBindingForInvertedVariable):
        poly_substitute(P("x1^-1"), {"x1": P("1 + x2")})


def test_substitute_genus4_denominator():
    subs = {"u0": P("x0*y0"), "u1": P("x1"), "u2": P("x2"), "u3": P("y1"), "u4": P("y2")}
    got = poly_product(poly_substitute(f, subs) for f in spinor_denominator(4, "u"))
    want = poly_product(P(f"1 - x0*y0*{a}*{b}*X")
                        for a in ("1", "x1", "x2", "x1*x2") for b in ("1", "y1", "y2", "y1*y2"))
    assert got == want


@given(polys(laurent=False, max_terms=3), st.integers(-3, 3))
def test_substitute_is_homomorphism(a, c):
    img = {"x1": MultiPoly.parse("x2 + 1", SMALL)}
    b = MultiPoly.const(c, SMALL) + MultiPoly.var("x1", SMALL)
    assert poly_substitute(a * b, img) == poly_substitute(a, img) * poly_substitute(b, img)


def test_normalize_factor():
    c, shift, g = normalize_factor(P("2*x1 - 2*x1^2"))
    assert c == -2 and DEFAULT_VARS.decode(shift)[2] == 1
    assert g == P("x1 - 1")


# rational functions ----------------------------------------------------------------------

def test_rf_add_to_one():
    s = rf_arith(RationalFn(P("1"), P("1 - x1")), RationalFn(P("-x1"), P("1 - x1")), "add")
    assert rf_equal(s, MultiPoly.one())


def test_rf_mul_inverse():
    a = RationalFn(P("1 + x1"), P("x2 - p"))
    assert rf_equal(rf_arith(a, a.inverse(), "mul"), MultiPoly.one())


def test_rf_equal_examples():
    assert rf_equal(RationalFn(P("1"), P("1 - x1")), RationalFn(P("1 + x1"), P("1 - x1^2")))
    assert not rf_equal(RationalFn(P("1"), P("1 - x1")), RationalFn(P("1"), P("1 - x2")))


@given(polys(), nonzero, nonzero)
def test_rf_equal_scaled_pairs(a, b, c):
    x = RationalFn(a, b)
    y = RationalFn(a * c, b * c)
    assert rf_equal(x, y) and rf_equal(y, x) and rf_equal(x, x)


@given(polys(), nonzero)
def test_sign_normalisation_keeps_value(a, b):
    x = RationalFn(a, b)
    y = RationalFn(-a, -b)
    assert rf_equal(x, y)
    assert x.den.leading_coefficient() > 0


def test_reduce_known_factors():
    f = RationalFn.from_factors(P("(1 - x1)*(1 - x0*X)"), [P("1 - x1"), P("1 - x0*x1*X")])
    r = rf_reduce_known_factors(f, [P("1 - x1")])
    assert rf_equal(r, RationalFn(P("1 - x0*X"), P("1 - x0*x1*X")))
    assert r.factor_list() == [normalize_factor(P("1 - x0*x1*X"))[2]]
    again = rf_reduce_known_factors(r, [P("1 - x1")])
    assert again.num == r.num and again.factors == r.factors


# series expansion ---------------------------------------------------------------------

def test_geometric_series():
    assert series_expand(RationalFn(P("1"), P("1 - x0*X")), "X", 3) == [P("1"), P("x0"), P("x0^2"), P("x0^3")]


def test_spinor_series_first_coefficient():
    coeffs = series_expand(andrianov_series_genus2(SphericalContext(2, "x")), "X", 1)
    assert coeffs[1] == P("x0*(1 + x1)*(1 + x2)")


def test_expand_non_unit_at_origin():
    with pytest.raises(DenominatorNotUnitAtOrigin):
        series_expand(RationalFn(P("1"), P("x0*X")), "X", 2)


VT_X = VarTable(("a", "b", "X"))


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3), st.lists(st.integers(-3, 3), min_size=1, max_size=3))
def test_series_of_product_is_cauchy_product(fa, ga):
    X = MultiPoly.var("X", VT_X)
    num_f = sum((MultiPoly.const(c, VT_X) * X ** i for i, c in enumerate(fa)), MultiPoly(VT_X))
    num_g = sum((MultiPoly.const(c, VT_X) * X ** i for i, c in enumerate(ga)), MultiPoly(VT_X))
    f = RationalFn(num_f, MultiPoly.parse("1 - a*X", VT_X))
    g = RationalFn(num_g, MultiPoly.parse("1 - b*X - a*b*X^2", VT_X))
    n = 6
    sf, sg, sfg = series_expand(f, "X", n), series_expand(g, "X", n), series_expand(f * g, "X", n)
    for k in range(n + 1):
        assert sfg[k] == sum((sf[i] * sg[k - i] for i in range(k + 1)), MultiPoly(VT_X))


def test_fraction_coefficients_are_exact():
    f = MultiPoly.const(Fraction(1, 3)) * P("x1")
    assert (f + f + f) == P("x1")

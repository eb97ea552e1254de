from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckeseries.arith import MultiPoly, poly_product, rf_equal
from heckeseries.errors import AlphabetMismatch, NotHomogeneous, NotInvariant
from heckeseries.hecke import (
    AmbiguousTensor, HeckeElement, HeckeSeriesPoly, NewtonPolygon, SatakeMap, functional_equation_check,
    inverse_satake, inverse_satake_tensor, lower_hull, newton_polygon, omega_apply, omega_series,
    parse_tensor, shimura_series, tensor,
)
from heckeseries.rankin import default_pair
from heckeseries.rankin_hecke import TENSOR1, TENSOR2, reference_RS, rankin_denominator_factors
from heckeseries.spherical import SphericalContext, is_weyl_invariant

G2 = SphericalContext(2, "x")
P = MultiPoly.parse
H = lambda s: HeckeElement.parse("genus2", s)  # noqa: E731


def test_monomial_product():
    assert H("T") * H("P") == H("T*P")


def test_tensor_of_generators():
    t = tensor(H("T"), HeckeElement.const("genus2")) * tensor(HeckeElement.const("genus2"), H("T"))
    assert t == parse_tensor(TENSOR2, "T⊗T")


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        H("T") + HeckeElement.parse("genus1", "T")


def test_parse_reference_coefficient():
    from heckeseries.reference_forms import S_COEFFS
    s2 = parse_tensor(TENSOR2, S_COEFFS[2])
    assert s2.weight() == (2, 2)


def test_chained_tensor_is_ambiguous():
    with pytest.raises(AmbiguousTensor):
        parse_tensor(TENSOR2, "T⊗T P⊗P")


def test_json_roundtrip():
    e = parse_tensor(TENSOR2, "p^6 P⊗P - 2T⊗T1")
    assert HeckeElement.from_json(e.to_json()) == e
    assert e.to_json()["alphabet"] == "genus2-tensor"


# spherical map ----------------------------------------------------------------------

def test_omega_of_t():
    assert rf_equal(omega_apply(H("T"), G2), P("x0*(1 + x1)*(1 + x2)"))


def test_omega_of_pp():
    img = omega_apply(parse_tensor(TENSOR2, "P⊗P"), default_pair())
    assert rf_equal(img, P("x0^2*x1*x2*y0^2*y1*y2*p^-6"))


def test_shimura_denominator_image():
    smap = SatakeMap(G2)
    num, den = shimura_series(2)
    assert omega_series(den, smap) == poly_product(
        P(s) for s in ("1 - x0*X", "1 - x0*x1*X", "1 - x0*x2*X", "1 - x0*x1*x2*X"))
    assert omega_series(num, smap) == P("1 - x0^2*x1*x2*p^-1*X^2")


def test_inverse_examples():
    assert inverse_satake(P("x0*(1 + x1)*(1 + x2)"), 1, G2) == H("T")
    assert inverse_satake(P("x0^2*x1*x2*p^-3"), 2, G2) == H("P")
    den = poly_product(P(s) for s in ("1 - x0*X", "1 - x0*x1*X", "1 - x0*x2*X", "1 - x0*x1*x2*X"))
    assert inverse_satake(den.coefficient("X", 2), 2, G2) == H("p*T1 + p*(p^2 + 1)*P")


def test_inverse_rejects_non_invariant():
    with pytest.raises(NotInvariant):
        inverse_satake(P("x0*x1"), 1, G2)


def test_inverse_rejects_wrong_weight():
    with pytest.raises(NotHomogeneous):
        inverse_satake(P("x0*(1 + x1)*(1 + x2)"), 2, G2)


def test_tensor_inverse():
    ctxs = default_pair()
    f = omega_apply(parse_tensor(TENSOR2, "T⊗T"), ctxs)
    assert inverse_satake_tensor(f, (1, 1), ctxs) == parse_tensor(TENSOR2, "T⊗T")


@st.composite
def genus2_elements(draw, weight):
    terms = []
    for a in range(weight + 1):
        for b in range((weight - a) // 2 + 1):
            c = (weight - a - 2 * b) // 2
            if a + 2 * b + 2 * c == weight:
                coef = draw(st.integers(-2, 2))
                if coef:
                    pe = draw(st.integers(0, 2))
                    terms.append(f"{coef}*p^{pe}*T^{a}*T1^{b}*P^{c}")
    return H(" + ".join(terms)) if terms else HeckeElement("genus2")


@given(st.integers(0, 5).flatmap(lambda w: st.tuples(st.just(w), genus2_elements(w))))
def test_inverse_after_omega_is_identity(case):
    w, e = case
    img = SatakeMap(G2).omega_poly(e)
    assert SatakeMap(G2).inverse_bareiss(img, w) == e
    assert SatakeMap(G2).inverse(img, w) == e


@given(genus2_elements(2), genus2_elements(3))
def test_omega_is_ring_homomorphism(a, b):
    smap = SatakeMap(G2)
    assert rf_equal(smap.omega(a * b), smap.omega(a) * smap.omega(b))
    assert rf_equal(smap.omega(a + a * b), smap.omega(a) + smap.omega(a * b))


def test_rankin_denominator_coefficients_are_bi_invariant():
    cx, cy = default_pair()
    den = poly_product(rankin_denominator_factors((cx, cy)))
    for i, c in den.coeffs_in("X").items():
        if i in (2, 5, 9):
            assert is_weyl_invariant(cx, c) and is_weyl_invariant(cy, c)


# series, functional equation, Newton polygons ----------------------------------------------

def test_reference_rs_shape():
    R, S = reference_RS()
    assert R.degree == 12 and S.degree == 16
    assert R[1].is_zero() and R[11].is_zero()
    assert R[12] == parse_tensor(TENSOR2, "p^34 P^6⊗P^6")
    assert S[16] == parse_tensor(TENSOR2, "p^6 P⊗P") ** 8


def test_reference_functional_equation():
    _, S = reference_RS()
    assert all(functional_equation_check(S))


def test_functional_equation_negative_control():
    _, S = reference_RS()
    coeffs = list(S.coeffs)
    coeffs[3] = coeffs[3] + parse_tensor(TENSOR2, "T⊗T")
    flags = functional_equation_check(HeckeSeriesPoly(coeffs))
    assert flags[3] is False and flags[0] is True


def test_lower_hull_drops_collinear_points():
    assert lower_hull([(0, 0), (1, 1), (2, 2), (3, 5)]) == [(0, 0), (2, 2), (3, 5)]


@given(st.lists(st.tuples(st.integers(0, 20), st.integers(-10, 40)), min_size=1, max_size=15))
def test_lower_hull_is_convex_and_below(points):
    hull = lower_hull(points)
    xs = [x for x, _ in hull]
    assert xs == sorted(set(xs))
    slopes = NewtonPolygon(hull).slopes
    assert all(a < b for a, b in zip(slopes, slopes[1:]))
    for x, y in points:
        for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
            if x1 <= x <= x2:
                assert (y - y1) * (x2 - x1) >= (y2 - y1) * (x - x1)


def test_newton_polygon_of_reference_s():
    _, S = reference_RS()
    poly = newton_polygon(S)
    assert poly.vertices[-1] == (16, 48) and poly.slopes_integral()


def test_newton_p_adic_needs_prime():
    _, S = reference_RS()
    with pytest.raises(ValueError):
        newton_polygon(S, "p-adic")


def test_newton_json():
    data = NewtonPolygon([(0, 0), (2, 3)]).to_json()
    assert data == {"vertices": [[0, 0], [2, 3]], "slopes": [str(Fraction(3, 2))]}


def test_genus1_tensor_alphabet():
    e = parse_tensor(TENSOR1, "p^2 P⊗P")
    assert rf_equal(omega_apply(e, default_pair(1)), P("x0^2*x1*y0^2*y1*p^0"))

"""Acceptance criteria 1-13.  Every check is an exact identity; each test also
enforces the stated time bound and prints one PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` for just the summary."""

import sys
import time

import pytest

from heckeseries.arith import RationalFn, rf_equal
from heckeseries.hecke import (
    SatakeMap, functional_equation_check, newton_polygon, omega_series, parse_tensor, shimura_series,
)
from heckeseries.lfactor import (
    HodgeType, LinearFactor, LinExpr, check_satake_constraint, eisenstein_params, factor_multiset, hodge_spinor,
    hodge_tensor, lift_merge_params, verify_conjecture_denominator, verify_ikeda_standard_factor,
)
from heckeseries.rankin import verify_genus1_rankin, verify_power_series, verify_theorem21
from heckeseries.rankin_hecke import TENSOR2, rs_reference_diff, derive_RS, genus1_tensor_identity_check
from heckeseries.reference_forms import HODGE_TENSOR_PRINTED
from heckeseries.spherical import SphericalContext, andrianov_series_genus2
from heckeseries.verify import run_suite

RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, elapsed: float, limit: float, note: str = "") -> None:
    status = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"criterion {n:2d}: {status}  ({elapsed:.2f}s, limit {limit:g}s){'  ' + note if note else ''}"
    RESULTS[n] = line
    print(line)
    assert ok, note or f"criterion {n} identity failed"
    assert elapsed < limit, f"criterion {n} took {elapsed:.1f}s, limit {limit}s"


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


_derived = {}


def derived_rs():
    if "rs" not in _derived:
        with Timer() as t:
            _derived["rs"] = derive_RS()
        _derived["elapsed"] = t.elapsed
    return _derived["rs"], _derived["elapsed"]


def test_criterion_01_genus2_generator_series():
    with Timer() as t:
        ctx = SphericalContext(2, "x")
        num, den = shimura_series(2)
        smap = SatakeMap(ctx)
        image = RationalFn.from_factors(omega_series(num, smap), [omega_series(den, smap)])
        ok = rf_equal(image, andrianov_series_genus2(ctx))
    record(1, ok, t.elapsed, 1)


def test_criterion_02_four_term_form():
    with Timer() as t:
        checks = run_suite("formula1").checks
    failed = [c.id for c in checks if c.status != "pass"]
    record(2, not failed and len(checks) == 3, t.elapsed, 5, f"failed: {failed}" if failed else "")


def test_criterion_03_rankin_closed_form():
    with Timer() as t:
        r = verify_theorem21(prefix_order=12)
    note = ""
    if not r.transcription_equal:
        note = (f"printed sum differs from the derived closed form; per-pole mismatches {r.term_mismatches}; "
                f"equal after flipping those signs: {r.transcription_equal_after_sign_fix}")
    record(3, r.prefix_agrees and r.transcription_equal, t.elapsed, 60, note)


def test_criterion_04_sixteen_factor_denominator(rankin_report):
    with Timer() as t:
        from heckeseries.rankin import reduced_rankin
        reduced_rankin()
    record(4, rankin_report.denominator_is_16_product, t.elapsed, 60)


def test_criterion_05_degree12_numerator(rankin_report):
    with Timer() as t:
        from heckeseries.rankin import rankin_numerator_quotient
        q = rankin_numerator_quotient()
    d = rankin_report.degree12_properties
    ok = (rankin_report.quadratic_factor_divides and q.degree_in("X") == 12 and d.constant_is_one
          and d.deg1_zero and d.deg11_zero and d.leading_term_matches)
    record(5, ok, t.elapsed, 60)


def test_criterion_06_power_substituted_displays():
    results, slowest = {}, 0.0
    for m in (2, 3):
        with Timer() as t:
            results[m] = verify_power_series(m=m)
        slowest = max(slowest, t.elapsed)
    bad = [m for m in (2, 3) if not results[m]["display_equal"]]
    note = "; ".join(f"m={m}: display differs (constant ratio {results[m]['constant_ratio']}, "
                     f"{results[m]['residual_terms']} residual terms after matching it)" for m in bad)
    record(6, not bad, slowest, 10, note)


def test_criterion_07_rs_form():
    rs, elapsed = derived_rs()
    pp = parse_tensor(TENSOR2, "p^6 P⊗P")
    ok = (rs.identity_holds and all(functional_equation_check(rs.S))
          and rs.S[1] == -parse_tensor(TENSOR2, "T⊗T") and rs.R[1].is_zero() and rs.R[11].is_zero()
          and rs.R[12] == parse_tensor(TENSOR2, "p^34 P^6⊗P^6") and rs.S[16] == pp ** 8)
    diff = rs_reference_diff(rs)
    with Timer() as tp:
        at3 = derive_RS(prime=3)
    ok_prime = at3.identity_holds and all(functional_equation_check(at3.S, 3))
    differing = [row["coefficient"] for row in diff if not row["equal"]]
    note = f"diff report: {len(diff)} coefficients, differing {differing}; p=3 run {tp.elapsed:.1f}s"
    record(7, ok and ok_prime and tp.elapsed < 60, elapsed, 600, note)


def test_criterion_08_newton_polygons():
    rs, _ = derived_rs()
    with Timer() as t:
        nr, ns = newton_polygon(rs.R), newton_polygon(rs.S)
    ok = nr.vertices[-1] == (12, 34) and ns.vertices[-1] == (16, 48) and nr.slopes_integral() and ns.slopes_integral()
    record(8, ok, t.elapsed, 1)


def test_criterion_09_genus1_rankin():
    with Timer() as t:
        r = verify_genus1_rankin()
        g = genus1_tensor_identity_check()
    ok = (r["closed_form_equal"] and r["four_term_form_equal"] and g["spherical_identity"]
          and g["denominator_coefficients_match"] and g["numerator_coefficients_match"])
    record(9, ok, t.elapsed, 5)


def test_criterion_10_conjecture_denominator():
    with Timer() as t:
        r = verify_conjecture_denominator()
    record(10, r["equal"] and r["factor_count"] == (16, 16), t.elapsed, 1)


def test_criterion_11_eisenstein_merge():
    with Timer() as t:
        k = LinExpr.symbol("k")
        ok = True
        for m in (1, 2, 3):
            merged = lift_merge_params(eisenstein_params(k, 2 * m), eisenstein_params(k - 2 * m, 2 * m))
            want = eisenstein_params(k, 4 * m)
            ok &= factor_multiset(LinearFactor(a) for a in merged.alphas[1:]) == \
                factor_multiset(LinearFactor(a) for a in want.alphas[1:])
            ok &= check_satake_constraint(merged)
    record(11, ok, t.elapsed, 1)


def test_criterion_12_hodge_tensor():
    with Timer() as t:
        got = hodge_tensor(hodge_spinor(2, "k"), hodge_spinor(2, "l"))
        printed = HodgeType([(a, b) for a, b, _ in HODGE_TENSOR_PRINTED], [s for *_, s in HODGE_TENSOR_PRINTED])
        ok = got.multiset() == printed.multiset() and got.sums() == {LinExpr.parse("2k+2l-6")}
    record(12, ok, t.elapsed, 1)


def test_criterion_13_ikeda_standard_factor():
    with Timer() as t:
        ok = True
        for m in (1, 2):
            r = verify_ikeda_standard_factor("k", m)
            ok &= r["degree_ok"] and r["roots_match"] and r["polynomial_identity"] and r["alpha_inversion_invariant"]
    record(13, ok, t.elapsed, 5)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))

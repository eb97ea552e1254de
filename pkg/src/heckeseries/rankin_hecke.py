"""The Rankin series written with Hecke-generator coefficients.

The sixteen-factor denominator and the reduced numerator of the spherical
closed form are pulled back coefficientwise through the tensor spherical
map, giving ``(1 - p^6 P⊗P X^2) R(X) / S(X)``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arith import MultiPoly, RationalFn, normalize_factor, poly_exact_div, poly_product, rf_equal
from .hecke import (
    HeckeElement, HeckeSeriesPoly, SatakeMap, functional_equation_check, parse_tensor,
    series_omega,
)
from .rankin import (
    RANKIN_QUADRATIC_FACTOR, default_pair, rankin_closed_form, rankin_delta_form,
    reduced_rankin,
)
from .reference_forms import (
    ALTERNATIVE_READINGS, GENUS1_TENSOR_DENOMINATOR, GENUS1_TENSOR_NUMERATOR, R_COEFFS,
    RANKIN_DENOMINATOR, S_COEFFS, SUSPECT_READINGS,
)
from .deltaseries import resum
from .spherical import spinor_factors

TENSOR2 = "genus2-tensor"
TENSOR1 = "genus1-tensor"
WORKERS_ENV = "HECKE_WORKERS"


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def rankin_denominator_factors(ctxs) -> list[MultiPoly]:
    """``1 - x0 y0 a b X`` for every pair of subset monomials ``a``, ``b``."""
    cx, cy = ctxs
    X = cx.vt.unit(cx.series_var)
    out = []
    for fx in spinor_factors(cx):
        ax = next(k for k in fx.items() if k[0])[0] - X
        for fy in spinor_factors(cy):
            ay = next(k for k in fy.items() if k[0])[0] - X
            out.append(MultiPoly(cx.vt, {0: 1, ax + ay + X: -1}))
    return out


@dataclass
class DerivedRS:
    R: HeckeSeriesPoly
    S: HeckeSeriesPoly
    identity_holds: bool
    prime: int | None = None
    details: dict = field(default_factory=dict)


def _solve(args):
    ctxs, prime, coeff, i = args
    return SatakeMap(ctxs, prime).inverse(coeff, (i, i))


def _solve_all(ctxs, prime, coeffs: dict[int, MultiPoly], degree: int) -> list[HeckeElement]:
    jobs = [(ctxs, prime, coeffs[i], i) for i in range(degree + 1) if i in coeffs]
    workers = min(worker_count(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            solved = list(pool.map(_solve, jobs))
    else:
        smap = SatakeMap(ctxs, prime)
        solved = [smap.inverse(c, (i, i)) for _, _, c, i in jobs]
    by_index = dict(zip((j[3] for j in jobs), solved))
    return [by_index.get(i, HeckeElement(TENSOR2)) for i in range(degree + 1)]


def derive_RS(ctxs=None, prime: int | None = None) -> DerivedRS:
    """Solve for R and S and check the identity under the tensor spherical map.

    With ``prime`` set the spherical images use that value of ``p``."""
    ctxs = ctxs or default_pair()
    cx = ctxs[0]
    vt, xv = cx.vt, cx.series_var
    factors = rankin_denominator_factors(ctxs)
    q16 = poly_product(factors)
    reduced = reduced_rankin(ctxs)
    sign = 1
    for f in factors:
        sign *= normalize_factor(f)[0]
    numerator = poly_exact_div(reduced.num.scale(sign), MultiPoly.parse(RANKIN_QUADRATIC_FACTOR, vt))
    if prime is not None:
        q16 = q16.subs({cx.prime: prime})
        numerator = numerator.subs({cx.prime: prime})
    s_coeffs = q16.coeffs_in(xv)
    r_coeffs = numerator.coeffs_in(xv)
    S = HeckeSeriesPoly(_solve_all(ctxs, prime, s_coeffs, 16))
    R = HeckeSeriesPoly(_solve_all(ctxs, prime, r_coeffs, max(r_coeffs)))

    smap = SatakeMap(ctxs, prime)
    lead = parse_tensor(TENSOR2, "p^6 P⊗P")
    front = HeckeSeriesPoly([HeckeElement.const(TENSOR2), HeckeElement(TENSOR2), -lead])
    num_image = series_omega(front, smap, xv) * series_omega(R, smap, xv)
    den_image = series_omega(S, smap, xv)
    target = reduced if prime is None else reduced.subs({cx.prime: prime})
    holds = rf_equal(RationalFn.from_factors(num_image, [den_image]), target)
    return DerivedRS(R, S, holds, prime, {"degree_R": R.degree, "degree_S": S.degree})


# reference coefficients --------------------------------------------------------

def reference_RS() -> tuple[HeckeSeriesPoly, HeckeSeriesPoly]:
    """The printed coefficients, with s_9..s_16 filled in by the functional
    equation."""
    one = HeckeElement.const(TENSOR2)
    r = [one, HeckeElement(TENSOR2)] + [parse_tensor(TENSOR2, R_COEFFS[i]) for i in range(2, 13)]
    s = [one] + [parse_tensor(TENSOR2, S_COEFFS[i]) for i in range(1, 9)]
    pp = parse_tensor(TENSOR2, "p^6 P⊗P")
    for i in range(9, 17):
        s.append(pp ** (i - 8) * s[16 - i])
    return HeckeSeriesPoly(r), HeckeSeriesPoly(s)


def rs_reference_diff(derived: DerivedRS) -> list[dict]:
    """Per-coefficient comparison of the derived and the printed R and S."""
    rows = []
    for series, printed, degree in (("R", R_COEFFS, 12), ("S", S_COEFFS, 8)):
        got = derived.R if series == "R" else derived.S
        for i in range(1 if series == "S" else 2, degree + 1):
            d = got[i]
            t = parse_tensor(TENSOR2, printed[i])
            if derived.prime is not None:
                t = t.subs_p(derived.prime)
            row = {
                "coefficient": f"{series.lower()}_{i}",
                "derived": str(d),
                "transcribed": str(t),
                "equal": d == t,
                "weight": t.weight(),
            }
            note = SUSPECT_READINGS.get((series, i))
            if note:
                row["suspect"] = note
            alt = ALTERNATIVE_READINGS.get((series, i))
            if alt is not None:
                a = parse_tensor(TENSOR2, alt)
                if derived.prime is not None:
                    a = a.subs_p(derived.prime)
                row["alternative_equal"] = d == a
            if not row["equal"]:
                row["difference"] = str(d - t)
            rows.append(row)
    return rows


# genus 1 ------------------------------------------------------------------------

def genus1_tensor_identity_check(ctxs=None) -> dict:
    """Pull the genus-1 Rankin series back to tensor generators and compare
    it with the printed generator form."""
    ctxs = ctxs or default_pair(1)
    cx = ctxs[0]
    xv = cx.series_var
    smap = SatakeMap(ctxs)
    closed = resum(rankin_delta_form(ctxs), xv)
    factors = rankin_denominator_factors(ctxs)
    den = poly_product(factors)
    num = (closed * RationalFn(den)).to_poly()
    dc, nc = den.coeffs_in(xv), num.coeffs_in(xv)
    zero = MultiPoly(cx.vt)
    den_solved = [smap.inverse(dc.get(i, zero), (i, i)) for i in range(max(dc) + 1)]
    num_solved = [smap.inverse(nc.get(i, zero), (i, i)) for i in range(max(nc) + 1)]
    printed_den = [parse_tensor(TENSOR1, t) if t != "1" else HeckeElement.const(TENSOR1)
                   for t in GENUS1_TENSOR_DENOMINATOR]
    printed_num = [HeckeElement.const(TENSOR1) if t == "1" else
                   HeckeElement(TENSOR1) if t == "0" else parse_tensor(TENSOR1, t)
                   for t in GENUS1_TENSOR_NUMERATOR]
    printed = RationalFn.from_factors(series_omega(HeckeSeriesPoly(printed_num), smap, xv),
                                      [series_omega(HeckeSeriesPoly(printed_den), smap, xv)])
    return {
        "spherical_identity": rf_equal(printed, closed),
        "denominator_coefficients_match": HeckeSeriesPoly(den_solved) == HeckeSeriesPoly(printed_den),
        "numerator_coefficients_match": HeckeSeriesPoly(num_solved) == HeckeSeriesPoly(printed_num),
        "derived_denominator": [str(c) for c in den_solved],
        "derived_numerator": [str(c) for c in num_solved],
    }


__all__ = [
    "derive_RS", "DerivedRS", "reference_RS", "rs_reference_diff",
    "genus1_tensor_identity_check", "rankin_denominator_factors", "worker_count",
    "functional_equation_check", "rankin_closed_form", "RANKIN_DENOMINATOR",
]

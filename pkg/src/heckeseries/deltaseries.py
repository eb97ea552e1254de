"""Closed forms for families ``delta -> sum_j c_j * m_j**delta``.

A :class:`DeltaSeries` is the partial-fraction shape of a rational
generating function whose denominator is a product of distinct factors
``(1 - m_j X)``: its coefficient at ``X**delta`` is exactly the family above.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .arith import Monomial, MultiPoly, RationalFn, VarTable, rf_equal
from .errors import MismatchedVarTable, NotLinearFactorForm, RepeatedBase


class DeltaSeries:
    """Immutable map from base monomial (packed key) to a non-zero coefficient."""

    __slots__ = ("vt", "_terms")

    def __init__(self, vt: VarTable, terms: Iterable[tuple[RationalFn, Monomial | int]] = ()):
        self.vt = vt
        merged: dict[int, RationalFn] = {}
        for coef, base in terms:
            key = base.key if isinstance(base, Monomial) else base
            merged[key] = merged[key] + coef if key in merged else coef
        self._terms = {k: c for k, c in merged.items() if not c.is_zero()}

    @classmethod
    def _unchecked(cls, vt: VarTable, terms: dict[int, RationalFn]) -> "DeltaSeries":
        self = cls.__new__(cls)
        self.vt = vt
        self._terms = terms
        return self

    def __len__(self) -> int:
        return len(self._terms)

    def bases(self) -> list[Monomial]:
        return [Monomial(self.vt, k) for k in self._sorted()]

    def terms(self) -> list[tuple[RationalFn, Monomial]]:
        return [(self._terms[k], Monomial(self.vt, k)) for k in self._sorted()]

    def coefficient(self, base: Monomial | Mapping[str, int]) -> RationalFn:
        key = base.key if isinstance(base, Monomial) else self.vt.encode(base)
        return self._terms[key]

    def _sorted(self) -> list[int]:
        return sorted(self._terms, key=self.vt.order_key)

    def __str__(self) -> str:
        return " + ".join(f"[{c}]*({b})^d" for c, b in self.terms())

    def to_json(self) -> dict:
        return {"terms": [{"coef": c.to_json(), "base": b.to_json()} for c, b in self.terms()]}

    def equals(self, other: "DeltaSeries") -> bool:
        if set(self._terms) != set(other._terms):
            return False
        return all(rf_equal(c, other._terms[k]) for k, c in self._terms.items())


def linear_factor_base(g: MultiPoly, series_var: str) -> tuple[RationalFn, int] | None:
    """If ``g == u * (1 - m*X)`` with ``u`` a unit and ``m`` a monic monomial,
    return ``(u, key of m)``; return None when ``g`` is free of ``X``."""
    parts = g.coeffs_in(series_var)
    if set(parts) == {0}:
        return None
    if set(parts) != {0, 1} or len(parts[0]) != 1 or len(parts[1]) != 1:
        raise NotLinearFactorForm(f"factor {g} is not of the form unit*(1 - m*{series_var})")
    (k0, c0), = parts[0].items()
    (k1, c1), = parts[1].items()
    if c1 != -c0:
        raise NotLinearFactorForm(f"factor {g} has a non-monic root monomial")
    m = k1 - k0
    return RationalFn(MultiPoly(g.vt, {k0: c0})), m


def partial_fractions(f: RationalFn, series_var: str = "X") -> DeltaSeries:
    """Decompose ``f`` over its distinct linear factors in ``series_var``.

    The residue at the factor ``(1 - m_i X)`` is
    ``num(X = 1/m_i) / (rest * prod_{j != i} (1 - m_j/m_i))``.
    """
    vt = f.vt
    unit = RationalFn(MultiPoly.one(vt))
    other: list[tuple[MultiPoly, int]] = []
    bases: list[int] = []
    for g, mult in f.factors.items():
        found = linear_factor_base(g, series_var)
        if found is None:
            other.append((g, mult))
            continue
        u, m = found
        if mult > 1 or m in bases:
            raise RepeatedBase(f"base {Monomial(vt, m)} occurs more than once")
        unit = unit * u
        bases.append(m)
    num = f.num
    if not num.is_zero():
        if num.min_degree_in(series_var) < 0:
            raise NotLinearFactorForm("numerator has negative powers of the series variable")
        if num.degree_in(series_var) >= len(bases):
            raise NotLinearFactorForm("improper fraction: polynomial part is not supported")
    num_over_unit = RationalFn.from_factors(num, [unit.num])
    xi = vt.index[series_var]
    if any(vt.exponent(m, xi) for m in bases):
        raise NotLinearFactorForm("base monomial involves the series variable")
    terms: dict[int, RationalFn] = {}
    for m in bases:
        inv = Monomial(vt, -m)
        value = num_over_unit.num.subs({series_var: inv})
        facs = [(g.subs({series_var: inv}), k) for g, k in other]
        for mj in bases:
            if mj != m:
                facs.append(MultiPoly(vt, {0: 1, mj - m: -1}))
        coef = RationalFn.from_factors(value, facs + [(g, k) for g, k in num_over_unit.factors.items()])
        if not coef.is_zero():
            terms[m] = coef
    return DeltaSeries._unchecked(vt, terms)


def pole_factor(base_key: int, vt: VarTable, series_var: str = "X") -> MultiPoly:
    return MultiPoly(vt, {0: 1, base_key + vt.unit(series_var): -1})


def resum(d: DeltaSeries, series_var: str = "X") -> RationalFn:
    """``sum_j c_j / (1 - m_j X)`` as one rational function."""
    vt = d.vt
    if not d._terms:
        return RationalFn(MultiPoly(vt))
    pieces = [c * RationalFn.from_factors(MultiPoly.one(vt), [pole_factor(m, vt, series_var)])
              for m, c in d._terms.items()]
    return RationalFn.sum(pieces)


def delta_product(a: DeltaSeries, b: DeltaSeries) -> DeltaSeries:
    if a.vt != b.vt:
        raise MismatchedVarTable(f"{a.vt} vs {b.vt}")
    out: dict[int, RationalFn] = {}
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            k = ka + kb
            c = ca * cb
            out[k] = out[k] + c if k in out else c
    return DeltaSeries._unchecked(a.vt, {k: c for k, c in out.items() if not c.is_zero()})


def delta_power_substitute(d: DeltaSeries, m: int) -> DeltaSeries:
    """The family ``delta -> d(m*delta)``."""
    if m < 1:
        raise ValueError("power must be positive")
    out: dict[int, RationalFn] = {}
    for k, c in d._terms.items():
        key = k * m
        out[key] = out[key] + c if key in out else c
    return DeltaSeries._unchecked(d.vt, {k: c for k, c in out.items() if not c.is_zero()})


def delta_eval(d: DeltaSeries, delta: int) -> RationalFn:
    if delta < 0:
        raise ValueError("delta must be non-negative")
    vt = d.vt
    if not d._terms:
        return RationalFn(MultiPoly(vt))
    return RationalFn.sum(c * MultiPoly(vt, {k * delta: 1}) for k, c in d._terms.items())


def delta_symbolic(d: DeltaSeries, power_names: Mapping[str, str], vt: VarTable) -> RationalFn:
    """The family with ``delta`` left symbolic: each ``v**delta`` becomes the
    variable ``power_names[v]`` of ``vt`` (which must extend ``d.vt``)."""
    src = d.vt
    out = []
    for k, c in d._terms.items():
        exps = {}
        for name, e in zip(src.names, src.decode(k)):
            if e:
                if name not in power_names:
                    raise ValueError(f"no power symbol for {name}")
                exps[power_names[name]] = e
        out.append(c.to_vartable(vt) * MultiPoly(vt, {vt.encode(exps): 1}))
    if not out:
        return RationalFn(MultiPoly(vt))
    return RationalFn.sum(out)


__all__ = [
    "DeltaSeries", "partial_fractions", "resum", "delta_product",
    "delta_power_substitute", "delta_eval", "delta_symbolic", "linear_factor_base", "pole_factor",
]

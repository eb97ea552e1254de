"""Satake parameters, spinor and standard Euler factors, Hodge types, and
the parameter bookkeeping for lifts to genus 4m.

Parameters are monomials whose exponents are exact linear expressions in
integer symbols such as ``k``, ``l``: ``p^{k-2}``, ``alpha^{-1} p^{1/2}``.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .arith import DEFAULT_VARS, MultiPoly, VarTable, poly_product
from .errors import (
    GenusMismatch, NonInvertibleParameter, UnsupportedSymbolicForm, WeightMismatch,
)

PRIME = "p"


# linear expressions ---------------------------------------------------------------

class LinExpr:
    """``const + sum coef_s * s`` with rational coefficients."""

    __slots__ = ("const", "coefs")

    def __init__(self, const=0, coefs: Mapping[str, Fraction] | None = None):
        self.const = Fraction(const)
        self.coefs = {s: Fraction(c) for s, c in (coefs or {}).items() if c}

    @classmethod
    def coerce(cls, v) -> "LinExpr":
        if isinstance(v, LinExpr):
            return v
        if isinstance(v, (int, Fraction)):
            return cls(v)
        if isinstance(v, str):
            return cls.parse(v)
        raise TypeError(f"cannot read {v!r} as a linear expression")

    @classmethod
    def symbol(cls, name: str) -> "LinExpr":
        return cls(0, {name: 1})

    _TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z]\w*)?(?:/(\d+))?")

    @classmethod
    def parse(cls, text: str) -> "LinExpr":
        s = text.replace(" ", "").replace("−", "-")
        if not s:
            raise ValueError("empty expression")
        const = Fraction(0)
        coefs: dict[str, Fraction] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot read linear expression {text!r}")
            if pos and not m.group(1):
                raise ValueError(f"missing operator in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            num = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(4):
                if not m.group(3):
                    raise ValueError(f"cannot read linear expression {text!r}")
                num /= int(m.group(4))
            if m.group(3):
                coefs[m.group(3)] = coefs.get(m.group(3), 0) + sign * num
            else:
                const += sign * num
            pos = m.end()
        return cls(const, coefs)

    def __add__(self, other):
        other = LinExpr.coerce(other)
        coefs = dict(self.coefs)
        for s, c in other.coefs.items():
            coefs[s] = coefs.get(s, 0) + c
        return LinExpr(self.const + other.const, coefs)

    __radd__ = __add__

    def __neg__(self):
        return LinExpr(-self.const, {s: -c for s, c in self.coefs.items()})

    def __sub__(self, other):
        return self + (-LinExpr.coerce(other))

    def __rsub__(self, other):
        return LinExpr.coerce(other) - self

    def __mul__(self, n):
        if isinstance(n, LinExpr):
            if n.coefs and self.coefs:
                raise UnsupportedSymbolicForm("product of two symbolic expressions")
            n, other = (n.const, self) if not n.coefs else (self.const, n)
            return other * n
        n = Fraction(n)
        return LinExpr(self.const * n, {s: c * n for s, c in self.coefs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            other = LinExpr.coerce(other)
        except TypeError:
            return NotImplemented
        return self.const == other.const and self.coefs == other.coefs

    def __hash__(self) -> int:
        return hash((self.const, frozenset(self.coefs.items())))

    def is_constant(self) -> bool:
        return not self.coefs

    def sort_key(self) -> tuple:
        return (tuple(sorted(self.coefs.items())), self.const)

    def __str__(self) -> str:
        parts = []
        for s in sorted(self.coefs):
            c = self.coefs[s]
            mag = abs(c)
            body = s if mag == 1 else f"{mag}{s}"
            parts.append(("-" if c < 0 else "+") + body)
        if self.const or not parts:
            parts.append(("-" if self.const < 0 else "+") + str(abs(self.const)))
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    def __repr__(self) -> str:
        return f"LinExpr({self})"


# symbolic monomials -------------------------------------------------------------

class SymMonomial:
    """``coef * prod base^exp`` with LinExpr exponents."""

    __slots__ = ("coef", "exps")

    def __init__(self, coef=1, exps: Mapping[str, object] | None = None):
        self.coef = Fraction(coef)
        out = {}
        for b, e in (exps or {}).items():
            e = LinExpr.coerce(e)
            if e != 0:
                out[b] = e
        self.exps = out

    @classmethod
    def var(cls, name: str, e=1) -> "SymMonomial":
        return cls(1, {name: e})

    @classmethod
    def p_power(cls, e) -> "SymMonomial":
        return cls(1, {PRIME: e})

    _FACTOR = re.compile(r"\s*\*?\s*(?:(\d+(?:/\d+)?)|([A-Za-z]\w*)(?:\^(?:\{([^}]*)\}|\(([^)]*)\)|(-?\d+(?:/\d+)?)))?)")

    @classmethod
    def parse(cls, text: str) -> "SymMonomial":
        s = text.strip().replace("−", "-").replace("α", "alpha")
        coef = Fraction(1)
        if s.startswith("-"):
            coef, s = Fraction(-1), s[1:]
        exps: dict[str, LinExpr] = {}
        pos = 0
        while pos < len(s):
            if not s[pos:].strip():
                break
            m = cls._FACTOR.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot read parameter {text!r}")
            if m.group(1):
                coef *= Fraction(m.group(1))
            else:
                e = m.group(3) or m.group(4) or m.group(5) or "1"
                exps[m.group(2)] = exps.get(m.group(2), LinExpr()) + LinExpr.parse(e)
            pos = m.end()
        return cls(coef, exps)

    def __mul__(self, other: "SymMonomial") -> "SymMonomial":
        exps = dict(self.exps)
        for b, e in other.exps.items():
            exps[b] = exps[b] + e if b in exps else e
        return SymMonomial(self.coef * other.coef, exps)

    def inverse(self) -> "SymMonomial":
        if not self.coef:
            raise NonInvertibleParameter("zero parameter has no inverse")
        return SymMonomial(1 / self.coef, {b: -e for b, e in self.exps.items()})

    def __pow__(self, n: int) -> "SymMonomial":
        if n < 0:
            return self.inverse() ** (-n)
        return SymMonomial(self.coef ** n, {b: e * n for b, e in self.exps.items()})

    def subs(self, bindings: Mapping[str, "SymMonomial"]) -> "SymMonomial":
        """Replace bases; only constant exponents can be substituted."""
        out = SymMonomial(self.coef)
        for b, e in self.exps.items():
            if b in bindings:
                if not e.is_constant() or e.const.denominator != 1:
                    raise UnsupportedSymbolicForm(f"cannot substitute into {b}^{{{e}}}")
                out = out * bindings[b] ** int(e.const)
            else:
                out = out * SymMonomial(1, {b: e})
        return out

    def is_p_power(self) -> bool:
        return self.coef == 1 and set(self.exps) <= {PRIME}

    def p_exponent(self) -> LinExpr:
        return self.exps.get(PRIME, LinExpr())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymMonomial):
            return NotImplemented
        return self.coef == other.coef and self.exps == other.exps

    def __hash__(self) -> int:
        return hash((self.coef, frozenset(self.exps.items())))

    def sort_key(self) -> tuple:
        return (tuple(sorted((b, e.sort_key()) for b, e in self.exps.items())), self.coef)

    def __str__(self) -> str:
        parts = []
        for b in sorted(self.exps, key=lambda b: (b == PRIME, b)):
            e = self.exps[b]
            if e == 1:
                parts.append(b)
            elif e.is_constant() and e.const.denominator == 1:
                parts.append(f"{b}^{e}")
            else:
                parts.append(f"{b}^{{{e}}}")
        body = "*".join(parts)
        if self.coef == 1:
            return body or "1"
        if self.coef == -1:
            return "-" + (body or "1")
        return f"{self.coef}*{body}" if body else str(self.coef)

    def __repr__(self) -> str:
        return f"SymMonomial({self})"


def _as_param(v) -> SymMonomial:
    if isinstance(v, SymMonomial):
        return v
    if isinstance(v, (int, Fraction)):
        return SymMonomial(v)
    return SymMonomial.parse(str(v))


# Satake parameters --------------------------------------------------------------

@dataclass
class SatakeParams:
    genus: int
    weight: LinExpr
    alphas: list[SymMonomial]

    def __post_init__(self):
        self.weight = LinExpr.coerce(self.weight)
        self.alphas = [_as_param(a) for a in self.alphas]
        if self.genus < 1:
            raise ValueError("genus must be positive")
        if len(self.alphas) != self.genus + 1:
            raise ValueError(f"genus {self.genus} needs {self.genus + 1} parameters, got {len(self.alphas)}")

    def to_json(self) -> dict:
        return {"genus": self.genus, "weight": str(self.weight), "alphas": [str(a) for a in self.alphas]}

    @classmethod
    def from_json(cls, data: Mapping) -> "SatakeParams":
        return cls(int(data["genus"]), LinExpr.coerce(str(data["weight"])),
                   [SymMonomial.parse(str(a)) for a in data["alphas"]])


def motive_weight(n: int, k) -> LinExpr:
    """``k n - n (n + 1) / 2``."""
    return LinExpr.coerce(k) * n - Fraction(n * (n + 1), 2)


def check_satake_constraint(s: SatakeParams) -> bool:
    """``alpha_0^2 alpha_1 ... alpha_n == p^(k n - n(n+1)/2)``."""
    prod = s.alphas[0] ** 2
    for a in s.alphas[1:]:
        prod = prod * a
    if set(prod.exps) - {PRIME}:
        raise UnsupportedSymbolicForm(f"product {prod} keeps symbols other than {PRIME}")
    return prod.coef == 1 and prod.p_exponent() == motive_weight(s.genus, s.weight)


# Euler factors --------------------------------------------------------------------

@dataclass(frozen=True)
class LinearFactor:
    """``1 - root * X``."""
    root: SymMonomial

    def __str__(self) -> str:
        r = str(self.root)
        return "1 - X" if r == "1" else f"1 - {r}*X"


def spin_polynomial(s: SatakeParams) -> list[LinearFactor]:
    """``(1 - a0 X) prod_S (1 - a0 prod_{i in S} a_i X)``, subsets by size."""
    a0 = s.alphas[0]
    out = []
    for r in range(s.genus + 1):
        for subset in combinations(range(1, s.genus + 1), r):
            root = a0
            for i in subset:
                root = root * s.alphas[i]
            out.append(LinearFactor(root))
    return out


def standard_polynomial(s: SatakeParams) -> list[LinearFactor]:
    """``(1 - X) prod_i (1 - a_i^-1 X)(1 - a_i X)``."""
    out = [LinearFactor(SymMonomial(1))]
    for a in s.alphas[1:]:
        if not a.coef:
            raise NonInvertibleParameter(f"parameter {a} is not invertible")
        out.append(LinearFactor(a.inverse()))
        out.append(LinearFactor(a))
    return out


def factor_multiset(factors: Iterable[LinearFactor]) -> dict[SymMonomial, int]:
    out: dict[SymMonomial, int] = {}
    for f in factors:
        out[f.root] = out.get(f.root, 0) + 1
    return out


# exact expansion: p^(a k + b) becomes K^a q^(2b), q standing for p^(1/2)
_POWER_NAMES = {"k": "Pk", "l": "Pl", "m": "Pm"}


def expansion_table(symbols: Iterable[str] = ("alpha", "sigma")) -> VarTable:
    return VarTable(("q",) + tuple(_POWER_NAMES.values()) + tuple(symbols) + ("X",))


def monomial_poly(mono: SymMonomial, vt: VarTable) -> MultiPoly:
    exps: dict[str, int] = {}
    for b, e in mono.exps.items():
        if b == PRIME:
            if e.const.denominator not in (1, 2):
                raise UnsupportedSymbolicForm(f"exponent {e} of {PRIME} is not a half-integer")
            exps["q"] = exps.get("q", 0) + int(e.const * 2)
            for s, c in e.coefs.items():
                if s not in _POWER_NAMES or c.denominator != 1:
                    raise UnsupportedSymbolicForm(f"exponent {e} of {PRIME} is not supported")
                exps[_POWER_NAMES[s]] = int(c)
        else:
            if not e.is_constant() or e.const.denominator != 1:
                raise UnsupportedSymbolicForm(f"exponent {e} of {b} must be an integer")
            if b not in vt.index:
                raise UnsupportedSymbolicForm(f"symbol {b} is not in the expansion table")
            exps[b] = exps.get(b, 0) + int(e.const)
    return MultiPoly(vt, {vt.encode(exps): mono.coef}) if mono.coef else MultiPoly(vt)


def expand_factors(factors: Sequence[LinearFactor], vt: VarTable, series_var: str = "X") -> MultiPoly:
    X = vt.unit(series_var)
    polys = [MultiPoly.one(vt) - monomial_poly(f.root, vt).shift(X) for f in factors]
    return poly_product(polys, MultiPoly.one(vt))


def factor_polys(factors: Sequence[LinearFactor], vt: VarTable = DEFAULT_VARS) -> list[MultiPoly]:
    """Factors as polynomials over a spherical table; exponents must be integers."""
    X = vt.unit("X")
    out = []
    for f in factors:
        exps = {}
        for b, e in f.root.exps.items():
            if not e.is_constant() or e.const.denominator != 1:
                raise UnsupportedSymbolicForm(f"exponent {e} of {b} must be an integer")
            exps[b] = int(e.const)
        out.append(MultiPoly(vt, {0: 1, vt.encode(exps) + X: -f.root.coef}))
    return out


# Hodge types ------------------------------------------------------------------------

@dataclass
class HodgeType:
    """Multiset of ``(p, q)`` pairs; diagonal pairs may carry a ``+``/``-`` tag."""
    pairs: list[tuple[LinExpr, LinExpr]]
    tags: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.pairs = [(LinExpr.coerce(a), LinExpr.coerce(b)) for a, b in self.pairs]
        if not self.tags:
            self.tags = [""] * len(self.pairs)

    def multiset(self) -> dict[tuple, int]:
        out: dict[tuple, int] = {}
        for (a, b), t in zip(self.pairs, self.tags):
            key = (a, b, t)
            out[key] = out.get(key, 0) + 1
        return out

    def sums(self) -> set[LinExpr]:
        return {a + b for a, b in self.pairs}

    def to_json(self) -> dict:
        out = {"pairs": [[str(a), str(b)] for a, b in self.pairs]}
        if any(self.tags):
            out["tags"] = self.tags
        return out

    def __len__(self) -> int:
        return len(self.pairs)


def hodge_spinor(n: int, k) -> HodgeType:
    """Pairs ``(sum_{i in I} (k - i), sum_{j in J} (k - j))`` over the splittings
    ``I + J = {1..n}``, ordered by the first entry."""
    k = LinExpr.coerce(k)
    if k.is_constant() and k.const <= n:
        warnings.warn(f"weight {k} is outside the range k > {n}", stacklevel=2)
    full = range(1, n + 1)
    pairs = []
    for r in range(n + 1):
        for I in combinations(full, r):
            J = [j for j in full if j not in I]
            pairs.append((sum((k - i for i in I), LinExpr()), sum((k - j for j in J), LinExpr())))
    pairs.sort(key=lambda pq: (pq[0].sort_key(), pq[1].sort_key()))
    return HodgeType(pairs)


def hodge_tensor(a: HodgeType, b: HodgeType) -> HodgeType:
    """All sums of pairs.  A diagonal sum of two off-diagonal pairs whose
    mirrored combination is a different source pair gets ``+``, its mirror ``-``."""
    def mirror_index(h: HodgeType, i: int) -> int:
        p, q = h.pairs[i]
        return next(j for j, (pp, qq) in enumerate(h.pairs) if pp == q and qq == p)

    pairs, tags = [], []
    seen: dict[tuple[int, int], str] = {}
    for i, (pa, qa) in enumerate(a.pairs):
        for j, (pb, qb) in enumerate(b.pairs):
            p, q = pa + pb, qa + qb
            tag = ""
            if p == q and pa != qa:
                partner = (mirror_index(a, i), mirror_index(b, j))
                if partner != (i, j):
                    tag = "-" if partner in seen else "+"
                    seen[(i, j)] = tag
            pairs.append((p, q))
            tags.append(tag)
    return HodgeType(pairs, tags)


# lifts ----------------------------------------------------------------------------------

def eisenstein_params(k, genus: int) -> SatakeParams:
    """Siegel-Eisenstein series of even genus 2m: ``alpha_i = p^(k - 2m + i - 1)``."""
    if genus % 2:
        raise GenusMismatch("Eisenstein parameters are defined for even genus")
    k = LinExpr.coerce(k)
    if k.is_constant() and k.const <= genus:
        raise ValueError(f"weight must exceed the genus {genus}")
    alphas = [SymMonomial(1)] + [SymMonomial.p_power(k - genus + i - 1) for i in range(1, genus + 1)]
    return SatakeParams(genus, k, alphas)


def lift_merge_params(f: SatakeParams, g: SatakeParams, allow_weight_mismatch: bool = False) -> SatakeParams:
    """``gamma_0 = alpha_0 beta_0``, then the alphas, then the betas."""
    if f.genus != g.genus or f.genus % 2:
        raise GenusMismatch(f"need equal even genus, got {f.genus} and {g.genus}")
    if g.weight != f.weight - f.genus:
        if not allow_weight_mismatch:
            raise WeightMismatch(f"second weight must be {f.weight - f.genus}, got {g.weight}")
        warnings.warn("merging parameters with mismatched weights", stacklevel=2)
    gammas = [f.alphas[0] * g.alphas[0]] + f.alphas[1:] + g.alphas[1:]
    return SatakeParams(2 * f.genus, f.weight, gammas)


def ikeda_params(k, m: int, alpha: str = "alpha") -> SatakeParams:
    """Ikeda lift of genus 2m (weight k + m) of a weight-2k eigenform with
    parameter ``alpha``."""
    if m < 1:
        raise ValueError("m must be positive")
    k = LinExpr.coerce(k)
    half = Fraction(1, 2)
    b0 = SymMonomial.p_power(k * m - Fraction(m * (m + 1), 2))
    first = [SymMonomial(1, {alpha: 1, PRIME: i - half}) for i in range(1, m + 1)]
    second = [SymMonomial(1, {alpha: -1, PRIME: i - half}) for i in range(1, m + 1)]
    return SatakeParams(2 * m, k + m, [b0] + first + second)


def hecke_quadratic(k, c, alpha: str = "alpha") -> tuple[SymMonomial, SymMonomial]:
    """Roots of ``1 - a(p) p^c X + p^(2k-1+2c) X^2`` with
    ``a(p) = (alpha + alpha^-1) p^(k - 1/2)``."""
    e = LinExpr.coerce(k) - Fraction(1, 2) + c
    return SymMonomial(1, {alpha: 1, PRIME: e}), SymMonomial(1, {alpha: -1, PRIME: e})


def quadratic_poly(k, c, vt: VarTable, alpha: str = "alpha") -> MultiPoly:
    """``1 - a(p) p^c X + p^(2k-1+2c) X^2`` expanded over ``vt``."""
    k = LinExpr.coerce(k)
    X = vt.unit("X")
    a_p = (monomial_poly(SymMonomial(1, {alpha: 1}), vt) + monomial_poly(SymMonomial(1, {alpha: -1}), vt)) \
        * monomial_poly(SymMonomial.p_power(k - Fraction(1, 2) + c), vt)
    top = monomial_poly(SymMonomial.p_power(k * 2 - 1 + LinExpr.coerce(c) * 2), vt)
    return MultiPoly.one(vt) - a_p.shift(X) + top.shift(2 * X)


def verify_ikeda_standard_factor(k="k", m: int = 1, alpha: str = "alpha") -> dict:
    """Local standard factor of the Ikeda lift against ``(1 - X)`` times 2m
    shifted Hecke quadratics of the weight-2k form."""
    params = ikeda_params(k, m, alpha)
    std = standard_polynomial(params)
    kk = LinExpr.coerce(k)
    shifts = [LinExpr(j) - kk - m for j in range(1, 2 * m + 1)]
    vt = expansion_table((alpha,))
    lhs = expand_factors(std, vt)
    rhs = MultiPoly.one(vt) - MultiPoly.monomial({"X": 1}, 1, vt)
    for c in shifts:
        rhs = rhs * quadratic_poly(kk, c, vt, alpha)
    quad_roots = [SymMonomial(1)]
    for c in shifts:
        quad_roots.extend(hecke_quadratic(kk, c, alpha))
    swapped = lhs.subs({alpha: MultiPoly.monomial({alpha: -1}, 1, vt)})
    return {
        "m": m,
        "degree": len(std),
        "degree_ok": len(std) == 4 * m + 1,
        "roots_match": factor_multiset(std) == factor_multiset(LinearFactor(r) for r in quad_roots),
        "polynomial_identity": lhs == rhs,
        "alpha_inversion_invariant": swapped == lhs,
        "shifts": [str(c) for c in shifts],
        "assumption": "non-vanishing condition of the lift is assumed, not checked",
    }


def verify_conjecture_denominator(substitution: Mapping[str, str] | None = None) -> dict:
    """Genus-4 spinor denominator in u-variables, substituted into x/y, against
    the sixteen-factor Rankin denominator."""
    from .arith import normalize_factor
    from .reference_forms import RANKIN_DENOMINATOR
    from .spherical import SphericalContext, spinor_factors

    sub = dict(substitution or {"u0": "x0*y0", "u1": "x1", "u2": "x2", "u3": "y1", "u4": "y2"})
    vt = DEFAULT_VARS
    bindings = {u: MultiPoly.parse(t, vt) for u, t in sub.items()}
    lhs = [f.subs(bindings) for f in spinor_factors(SphericalContext(4, "u", vt))]
    rhs = [MultiPoly.parse(s, vt) for s in RANKIN_DENOMINATOR]

    def multiset(polys):
        out: dict[MultiPoly, int] = {}
        for f in polys:
            g = normalize_factor(f)[2]
            out[g] = out.get(g, 0) + 1
        return out

    return {"factor_count": (len(lhs), len(rhs)), "equal": multiset(lhs) == multiset(rhs)}


__all__ = [
    "LinExpr", "SymMonomial", "SatakeParams", "LinearFactor", "HodgeType",
    "check_satake_constraint", "spin_polynomial", "standard_polynomial", "factor_multiset",
    "expand_factors", "expansion_table", "factor_polys", "hodge_spinor", "hodge_tensor",
    "eisenstein_params", "lift_merge_params", "ikeda_params", "hecke_quadratic",
    "verify_ikeda_standard_factor", "verify_conjecture_denominator", "motive_weight",
]

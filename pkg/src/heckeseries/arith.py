"""Sparse multivariate Laurent polynomials and rational functions with exact
rational coefficients.

A monomial over a :class:`VarTable` is packed into one Python integer: the
exponent of variable ``i`` is a signed digit at radix ``2**BITS`` and the top
digit holds the total degree.  Because the packing is linear, multiplying two
monomials is a single integer addition.  For monomials whose exponents are all
non-negative, integer comparison of keys coincides with graded-lexicographic
order on the table (first variable most significant), which is what the
division routine relies on.

Scalars are ``int`` or :class:`fractions.Fraction`; both compare and hash
equal when they denote the same rational.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Union

from .errors import (
    DenominatorNotUnitAtOrigin,
    MismatchedVarTable,
    NonUnitBindingForInvertedVariable,
    NotDivisible,
)

Scalar = Union[int, Fraction]

DEFAULT_NAMES = (
    "p", "x0", "x1", "x2", "y0", "y1", "y2", "X",
    "u0", "u1", "u2", "u3", "u4", "alpha",
)


def _qdiv(a: Scalar, b: Scalar) -> Scalar:
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if not r:
            return q
    out = Fraction(a) / b
    return out.numerator if out.denominator == 1 else out


def _norm(c: Scalar) -> Scalar:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class VarTable:
    """Ordered alphabet of distinct variable names."""

    BITS = 20

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}
        n = len(names)
        R = 1 << self.BITS
        self.n = n
        self._half = R >> 1
        self._mask = R - 1
        self._deg_unit = R ** n
        self._shift = tuple(self.BITS * (n - 1 - i) for i in range(n))
        self._units = tuple((1 << s) + self._deg_unit for s in self._shift)
        self._bias = sum(self._half << (self.BITS * j) for j in range(n + 1))

    def __repr__(self) -> str:
        return f"VarTable({self.names!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def extend(self, *names: str) -> "VarTable":
        return VarTable(self.names + tuple(n for n in names if n not in self.index))

    def unit(self, name: str) -> int:
        return self._units[self.index[name]]

    def encode(self, exps: Union[Mapping[str, int], Iterable[int]]) -> int:
        if isinstance(exps, Mapping):
            key = 0
            for name, e in exps.items():
                if e:
                    key += e * self._units[self.index[name]]
            return key
        return sum(e * u for e, u in zip(exps, self._units))

    def decode(self, key: int) -> tuple[int, ...]:
        v = key + self._bias
        m, h = self._mask, self._half
        return tuple(((v >> s) & m) - h for s in self._shift)

    def exponent(self, key: int, i: int) -> int:
        return (((key + self._bias) >> self._shift[i]) & self._mask) - self._half

    def degree(self, key: int) -> int:
        return ((key + self._bias) >> (self.BITS * self.n)) - self._half

    def order_key(self, key: int) -> tuple[int, ...]:
        """Graded-lex sort key valid for Laurent monomials."""
        e = self.decode(key)
        return (sum(e),) + e


DEFAULT_VARS = VarTable(DEFAULT_NAMES)


class Monomial:
    """A Laurent monomial (exponent vector) over a VarTable."""

    __slots__ = ("vt", "key")

    def __init__(self, vt: VarTable, key: int = 0):
        self.vt = vt
        self.key = key

    @classmethod
    def of(cls, vt: VarTable, **exps: int) -> "Monomial":
        return cls(vt, vt.encode(exps))

    @property
    def exponents(self) -> dict[str, int]:
        return {n: e for n, e in zip(self.vt.names, self.vt.decode(self.key)) if e}

    def _check(self, other: "Monomial") -> None:
        if other.vt is not self.vt and other.vt != self.vt:
            raise MismatchedVarTable(f"{self.vt} vs {other.vt}")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.vt, self.key + other.key)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.vt, self.key - other.key)

    def __pow__(self, e: int) -> "Monomial":
        return Monomial(self.vt, self.key * e)

    def inverse(self) -> "Monomial":
        return Monomial(self.vt, -self.key)

    def is_one(self) -> bool:
        return self.key == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.key == other.key and self.vt == other.vt

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "Monomial") -> bool:
        return self.vt.order_key(self.key) < self.vt.order_key(other.key)

    def to_poly(self) -> "MultiPoly":
        return MultiPoly(self.vt, {self.key: 1})

    def __str__(self) -> str:
        return _mono_str(self.vt, self.key) or "1"

    __repr__ = __str__

    def to_json(self) -> dict[str, int]:
        return self.exponents


def _mono_str(vt: VarTable, key: int) -> str:
    parts = []
    for name, e in zip(vt.names, vt.decode(key)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class MultiPoly:
    """Immutable sparse Laurent polynomial; ``terms`` maps packed keys to
    non-zero scalars."""

    __slots__ = ("vt", "_t", "_hash")

    def __init__(self, vt: VarTable, terms: dict[int, Scalar] | None = None):
        self.vt = vt
        self._t = terms if terms is not None else {}
        self._hash = None

    # construction -----------------------------------------------------------
    @classmethod
    def zero(cls, vt: VarTable = DEFAULT_VARS) -> "MultiPoly":
        return cls(vt, {})

    @classmethod
    def one(cls, vt: VarTable = DEFAULT_VARS) -> "MultiPoly":
        return cls(vt, {0: 1})

    @classmethod
    def const(cls, c: Scalar, vt: VarTable = DEFAULT_VARS) -> "MultiPoly":
        c = _norm(c)
        return cls(vt, {0: c} if c else {})

    @classmethod
    def var(cls, name: str, vt: VarTable = DEFAULT_VARS) -> "MultiPoly":
        return cls(vt, {vt.unit(name): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coef: Scalar = 1,
                 vt: VarTable = DEFAULT_VARS) -> "MultiPoly":
        coef = _norm(coef)
        return cls(vt, {vt.encode(exps): coef} if coef else {})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[str, int], Scalar]],
                   vt: VarTable = DEFAULT_VARS) -> "MultiPoly":
        out: dict[int, Scalar] = {}
        for exps, c in terms:
            k = vt.encode(exps)
            out[k] = out.get(k, 0) + c
        return cls(vt, {k: _norm(c) for k, c in out.items() if c})

    @classmethod
    def parse(cls, text: str, vt: VarTable = DEFAULT_VARS) -> "MultiPoly":
        return _Parser(text, vt).parse()

    # inspection -------------------------------------------------------------
    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_one(self) -> bool:
        return self._t == {0: 1}

    def constant_term(self) -> Scalar:
        return self._t.get(0, 0)

    def items(self):
        return self._t.items()

    def terms(self) -> Iterator[tuple[dict[str, int], Scalar]]:
        """(exponent map, coefficient) pairs in canonical (descending
        graded-lex) order."""
        vt = self.vt
        for k in self.sorted_keys():
            yield Monomial(vt, k).exponents, self._t[k]

    def sorted_keys(self) -> list[int]:
        return sorted(self._t, key=self.vt.order_key, reverse=True)

    def leading_key(self) -> int:
        return max(self._t, key=self.vt.order_key)

    def leading_coefficient(self) -> Scalar:
        return self._t[self.leading_key()] if self._t else 0

    def variables(self) -> set[str]:
        used: set[str] = set()
        for k in self._t:
            used.update(n for n, e in zip(self.vt.names, self.vt.decode(k)) if e)
        return used

    def degree_in(self, name: str) -> int:
        i = self.vt.index[name]
        return max(self.vt.exponent(k, i) for k in self._t)

    def min_degree_in(self, name: str) -> int:
        i = self.vt.index[name]
        return min(self.vt.exponent(k, i) for k in self._t)

    def min_exponents(self) -> tuple[int, ...]:
        decoded = [self.vt.decode(k) for k in self._t]
        return tuple(min(col) for col in zip(*decoded))

    def as_monomial(self) -> tuple[Scalar, Monomial]:
        if len(self._t) != 1:
            raise ValueError("not a single term")
        (k, c), = self._t.items()
        return c, Monomial(self.vt, k)

    def coeffs_in(self, name: str) -> dict[int, "MultiPoly"]:
        """Split by the exponent of ``name``; the variable is removed from
        each returned coefficient."""
        vt = self.vt
        i = vt.index[name]
        unit = vt._units[i]
        groups: dict[int, dict[int, Scalar]] = {}
        for k, c in self._t.items():
            e = vt.exponent(k, i)
            groups.setdefault(e, {})[k - e * unit] = c
        return {e: MultiPoly(vt, t) for e, t in groups.items()}

    def coefficient(self, name: str, e: int) -> "MultiPoly":
        return self.coeffs_in(name).get(e, MultiPoly(self.vt))

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vt is not self.vt and other.vt != self.vt:
                raise MismatchedVarTable(f"{self.vt} vs {other.vt}")
            return other
        if isinstance(other, Monomial):
            return MultiPoly(self.vt, {other.key: 1})
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other, self.vt)
        return NotImplemented

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return MultiPoly(self.vt, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vt, {k: -c for k, c in self._t.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._t)
        for k, c in other._t.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                del out[k]
        return MultiPoly(self.vt, out)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._t, other._t
        if not a or not b:
            return MultiPoly(self.vt)
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            if cb == 1:
                return MultiPoly(self.vt, {k + kb: c for k, c in a.items()})
            return MultiPoly(self.vt, {k + kb: c * cb for k, c in a.items()})
        out: dict[int, Scalar] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return MultiPoly(self.vt, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            c, m = self.as_monomial()
            return MultiPoly(self.vt, {m.key * e: _norm(Fraction(1, 1) / Fraction(c) ** -e)})
        result = MultiPoly.one(self.vt)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "MultiPoly":
        c = _norm(c)
        if not c:
            return MultiPoly(self.vt)
        return MultiPoly(self.vt, {k: _norm(v * c) for k, v in self._t.items()})

    def shift(self, key: int) -> "MultiPoly":
        """Multiply by the monomial with packed key ``key``."""
        return MultiPoly(self.vt, {k + key: c for k, c in self._t.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.vt)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vt == other.vt and self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        return poly_exact_div(self, other)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            poly_exact_div(other, self)
        except NotDivisible:
            return False
        return True

    def subs(self, bindings: Mapping[str, object]) -> "MultiPoly":
        return poly_substitute(self, bindings)

    def to_vartable(self, vt: VarTable) -> "MultiPoly":
        """Re-express over another table containing every used variable."""
        if vt == self.vt:
            return self
        src = self.vt
        out = {}
        for k, c in self._t.items():
            exps = {n: e for n, e in zip(src.names, src.decode(k)) if e}
            missing = set(exps) - set(vt.index)
            if missing:
                raise MismatchedVarTable(f"variables {sorted(missing)} not in target table")
            out[vt.encode(exps)] = c
        return MultiPoly(vt, out)

    # output -----------------------------------------------------------------
    def __str__(self) -> str:
        if not self._t:
            return "0"
        pieces = []
        for k in self.sorted_keys():
            c = self._t[k]
            mono = _mono_str(self.vt, k)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def to_latex(self) -> str:
        s = str(self)
        s = re.sub(r"\^(-?\d+)", r"^{\1}", s)
        s = re.sub(r"([a-zA-Z]+)(\d)", r"\1_{\2}", s)
        return s.replace("*", " ").replace("alpha", r"\alpha")

    def to_json(self) -> dict:
        terms = []
        for k in self.sorted_keys():
            c = Fraction(self._t[k])
            terms.append({"m": Monomial(self.vt, k).exponents,
                          "n": str(c.numerator), "d": str(c.denominator)})
        return {"vars": list(self.vt.names), "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        vt = VarTable(data["vars"])
        if vt == DEFAULT_VARS:
            vt = DEFAULT_VARS
        return cls.from_terms(
            ((t["m"], Fraction(int(t["n"]), int(t["d"]))) for t in data["terms"]), vt)


# --------------------------------------------------------------------------
# named operations

def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def poly_product(factors: Iterable[MultiPoly], start: MultiPoly | None = None) -> MultiPoly:
    """Product that multiplies the smallest operands first.

    Feeding a small accumulator through a chain of short factors keeps
    every intermediate product at (running size) x (short factor).
    """
    factors = sorted(factors, key=len)
    if start is None:
        if not factors:
            raise ValueError("empty product needs a start value")
        acc, factors = factors[0], factors[1:]
    else:
        acc = start
    for f in factors:
        acc = acc * f
    return acc


def poly_exact_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Quotient ``q`` with ``q*b == a`` in the Laurent ring.

    Negative exponents are cleared by monomial shifts so the core is plain
    polynomial division in graded-lex order; because ``b`` is stripped of its
    monomial content the quotient is then a genuine polynomial.
    """
    b = a._coerce(b)
    vt = a.vt
    if not b._t:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a._t:
        return MultiPoly(vt)
    if len(b._t) == 1:
        (kb, cb), = b._t.items()
        return MultiPoly(vt, {k - kb: _qdiv(c, cb) for k, c in a._t.items()})
    shift_b = vt.encode(b.min_exponents())
    shift_a = vt.encode(a.min_exponents())
    bt = {k - shift_b: c for k, c in b._t.items()}
    r = {k - shift_a: c for k, c in a._t.items()}
    lead_b = max(bt)
    lc_b = bt[lead_b]
    rest_b = [(k - lead_b, c) for k, c in bt.items() if k != lead_b]
    heap = [-k for k in r]
    heapq.heapify(heap)
    q: dict[int, Scalar] = {}
    decode = vt.decode
    while heap:
        lead = -heapq.heappop(heap)
        c = r.pop(lead, 0)
        if not c:
            continue
        qk = lead - lead_b
        if any(e < 0 for e in decode(qk)):
            raise NotDivisible("leading term of remainder not divisible")
        qc = _qdiv(c, lc_b)
        q[qk] = qc
        for kb, cb in rest_b:
            k = lead + kb
            v = r.get(k)
            if v is None:
                r[k] = -qc * cb
                heapq.heappush(heap, -k)
            else:
                v -= qc * cb
                if v:
                    r[k] = v
                else:
                    del r[k]
    shift = shift_a - shift_b
    return MultiPoly(vt, {k + shift: _norm(c) for k, c in q.items()})


def poly_substitute(a: MultiPoly, bindings: Mapping[str, object]) -> MultiPoly:
    """Ring homomorphism sending each bound variable to its image."""
    vt = a.vt
    imgs: dict[int, MultiPoly] = {}
    for name, target in bindings.items():
        if isinstance(target, Monomial):
            target = target.to_poly()
        elif isinstance(target, (int, Fraction)):
            target = MultiPoly.const(target, vt)
        elif isinstance(target, str):
            target = MultiPoly.parse(target, vt)
        target = a._coerce(target)
        imgs[vt.index[name]] = target
    if not imgs:
        return a
    if all(len(t) == 1 for t in imgs.values()):
        # unit images: exponent vectors transform linearly
        lin = []
        for i, t in imgs.items():
            (k, c), = t._t.items()
            lin.append((i, k - vt._units[i], c))
        out: dict[int, Scalar] = {}
        for k, c in a._t.items():
            nk = k
            for i, dk, ci in lin:
                e = vt.exponent(k, i)
                if e:
                    nk += e * dk
                    if ci != 1:
                        c = c * (Fraction(ci) ** e if e < 0 else ci ** e)
            v = out.get(nk, 0) + c
            if v:
                out[nk] = v
            else:
                out.pop(nk, None)
        return MultiPoly(vt, {k: _norm(c) for k, c in out.items()})
    powers: dict[tuple[int, int], MultiPoly] = {}

    def power(i: int, e: int) -> MultiPoly:
        if (i, e) not in powers:
            t = imgs[i]
            if e < 0 and len(t) != 1:
                raise NonUnitBindingForInvertedVariable(
                    f"{vt.names[i]} occurs with exponent {e} but its image is not a unit")
            powers[(i, e)] = t ** e
        return powers[(i, e)]

    groups: dict[tuple, dict[int, Scalar]] = {}
    for k, c in a._t.items():
        rest = k
        bound = []
        for i in imgs:
            e = vt.exponent(k, i)
            if e:
                rest -= e * vt._units[i]
                bound.append((i, e))
        groups.setdefault(tuple(bound), {})[rest] = c
    result = MultiPoly(vt)
    for bound, rest_terms in groups.items():
        piece = MultiPoly(vt, rest_terms)
        for i, e in bound:
            piece = piece * power(i, e)
        result = result + piece
    return result


# --------------------------------------------------------------------------
# rational functions

def _content(f: MultiPoly) -> Fraction:
    nums = 0
    den = 1
    for c in f._t.values():
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    for c in f._t.values():
        c = Fraction(c) * den
        nums = gcd(nums, c.numerator)
    return Fraction(nums, den)


def normalize_factor(f: MultiPoly) -> tuple[Scalar, int, MultiPoly]:
    """Write ``f = c * m * g`` with ``c`` a scalar, ``m`` a monomial (packed
    key) and ``g`` primitive, free of monomial content, with positive leading
    coefficient.  Returns ``(c, m, g)``; ``g == 1`` means ``f`` is a unit."""
    if not f._t:
        raise ZeroDivisionError("zero factor")
    vt = f.vt
    shift = vt.encode(f.min_exponents())
    g = {k - shift: c for k, c in f._t.items()}
    content = _content(f)
    lead = max(g, key=vt.order_key)
    if g[lead] < 0:
        content = -content
    g = {k: _norm(Fraction(c) / content) for k, c in g.items()}
    return _norm(content), shift, MultiPoly(vt, g)


class RationalFn:
    """Quotient ``num / den`` of Laurent polynomials.

    The denominator is kept as a multiset of normalized factors so that sums
    use a least common multiple of the known factors instead of the full
    product of denominators.  Nothing is ever reduced by a GCD; equality is
    decided by cross-multiplication.
    """

    __slots__ = ("num", "factors", "_den")

    def __init__(self, num: MultiPoly | Scalar, den: MultiPoly | Scalar | None = None,
                 vt: VarTable | None = None):
        if not isinstance(num, MultiPoly):
            num = MultiPoly.const(num, vt or (den.vt if isinstance(den, MultiPoly) else DEFAULT_VARS))
        factors = [] if den is None else [den if isinstance(den, MultiPoly)
                                          else MultiPoly.const(den, num.vt)]
        self._setup(num, factors)

    @classmethod
    def from_factors(cls, num: MultiPoly, factors: Iterable[MultiPoly | tuple[MultiPoly, int]]) -> "RationalFn":
        self = cls.__new__(cls)
        self._setup(num, factors)
        return self

    def _setup(self, num: MultiPoly, factors) -> None:
        fs: dict[MultiPoly, int] = {}
        for item in factors:
            f, mult = item if isinstance(item, tuple) else (item, 1)
            f = num._coerce(f)
            if f.is_zero():
                raise ZeroDivisionError("zero denominator")
            c, shift, g = normalize_factor(f)
            if mult:
                num = num.shift(-shift * mult)
                num = num.scale(Fraction(1) / Fraction(c) ** mult)
            if not g.is_one():
                fs[g] = fs.get(g, 0) + mult
        self.num = num
        self.factors = fs
        self._den = None

    @classmethod
    def _raw(cls, num: MultiPoly, factors: dict[MultiPoly, int]) -> "RationalFn":
        self = cls.__new__(cls)
        self.num = num
        self.factors = factors
        self._den = None
        return self

    @property
    def vt(self) -> VarTable:
        return self.num.vt

    @property
    def den(self) -> MultiPoly:
        if self._den is None:
            parts = [f for f, m in self.factors.items() for _ in range(m)]
            self._den = poly_product(parts, MultiPoly.one(self.vt))
        return self._den

    def factor_list(self) -> list[MultiPoly]:
        return [f for f, m in self.factors.items() for _ in range(m)]

    def _coerce(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            if other.vt is not self.vt and other.vt != self.vt:
                raise MismatchedVarTable(f"{self.vt} vs {other.vt}")
            return other
        if isinstance(other, (MultiPoly, int, Fraction, Monomial)):
            return RationalFn._raw(self.num._coerce(other), {})
        return NotImplemented

    def is_polynomial(self) -> bool:
        return not self.factors

    def to_poly(self) -> MultiPoly:
        """The numerator divided exactly by the denominator."""
        q = self.num
        for f, m in self.factors.items():
            for _ in range(m):
                q = poly_exact_div(q, f)
        return q

    def is_zero(self) -> bool:
        return self.num.is_zero()

    @staticmethod
    def sum(items: Iterable["RationalFn"]) -> "RationalFn":
        """Exact n-ary sum over the lcm of the known denominator factors."""
        items = list(items)
        if not items:
            raise ValueError("empty sum")
        vt = items[0].vt
        lcm: dict[MultiPoly, int] = {}
        for it in items:
            for f, m in it.factors.items():
                if lcm.get(f, 0) < m:
                    lcm[f] = m
        total = MultiPoly(vt)
        for it in items:
            if it.num.is_zero():
                continue
            missing = []
            for f, m in lcm.items():
                missing.extend([f] * (m - it.factors.get(f, 0)))
            total = total + poly_product(missing, it.num)
        return RationalFn._raw(total, lcm)

    def __add__(self, other) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFn.sum([self, other])

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn._raw(-self.num, dict(self.factors))

    def __sub__(self, other) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFn.sum([self, -other])

    def __rsub__(self, other) -> "RationalFn":
        return (-self) + other

    def __mul__(self, other) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        fs = dict(self.factors)
        for f, m in other.factors.items():
            fs[f] = fs.get(f, 0) + m
        return RationalFn._raw(self.num * other.num, fs)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFn":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num = poly_product(self.factor_list(), MultiPoly.one(self.vt))
        return RationalFn.from_factors(num, [self.num])

    def __truediv__(self, other) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, e: int) -> "RationalFn":
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFn._raw(self.num ** e, {f: m * e for f, m in self.factors.items()})

    def equals(self, other) -> bool:
        return rf_equal(self, other)

    __hash__ = None

    def subs(self, bindings: Mapping[str, object]) -> "RationalFn":
        num = poly_substitute(self.num, bindings)
        facs = [(poly_substitute(f, bindings), m) for f, m in self.factors.items()]
        return RationalFn.from_factors(num, facs)

    def reduce_known_factors(self, candidates: Iterable[MultiPoly]) -> "RationalFn":
        return rf_reduce_known_factors(self, candidates)

    def to_vartable(self, vt: VarTable) -> "RationalFn":
        if vt == self.vt:
            return self
        return RationalFn._raw(self.num.to_vartable(vt),
                               {f.to_vartable(vt): m for f, m in self.factors.items()})

    def __str__(self) -> str:
        if not self.factors:
            return str(self.num)
        den = " * ".join(f"({f})" + (f"^{m}" if m > 1 else "") for f, m in self.factors.items())
        return f"({self.num}) / ({den})"

    def __repr__(self) -> str:
        return f"RationalFn({self})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalFn":
        return cls(MultiPoly.from_json(data["num"]), MultiPoly.from_json(data["den"]))


def rf_arith(a: RationalFn, b: RationalFn, op: str) -> RationalFn:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def rf_equal(a, b) -> bool:
    """Exact, GCD-free equality ``a.num * b.den == b.num * a.den``."""
    if not isinstance(a, RationalFn):
        a = RationalFn(a) if isinstance(a, MultiPoly) else RationalFn(MultiPoly.const(a, b.vt))
    b = a._coerce(b)
    if a.factors == b.factors:
        return a.num == b.num
    if len(a.factors) + len(b.factors) > 2 and a.den == b.den:
        return a.num == b.num
    lcm = dict(a.factors)
    for f, m in b.factors.items():
        lcm[f] = max(lcm.get(f, 0), m)

    def lifted(x: RationalFn) -> MultiPoly:
        missing = []
        for f, m in lcm.items():
            missing.extend([f] * (m - x.factors.get(f, 0)))
        return poly_product(missing, x.num)

    return lifted(a) == lifted(b)


def rf_reduce_known_factors(a: RationalFn, candidates: Iterable[MultiPoly]) -> RationalFn:
    """Cancel every candidate that divides both numerator and denominator."""
    num = a.num
    fs = dict(a.factors)
    normed = []
    for cand in candidates:
        _, _, g = normalize_factor(a.num._coerce(cand))
        if not g.is_one():
            normed.append(g)
    changed = True
    while changed:
        changed = False
        for g in normed:
            if num.is_zero():
                break
            host = g if g in fs else None
            if host is None:
                for f in sorted(fs, key=len):
                    if len(f) > len(g) and g.divides(f):
                        host = f
                        break
            if host is None:
                continue
            try:
                new_num = poly_exact_div(num, g)
            except NotDivisible:
                continue
            num = new_num
            fs[host] -= 1
            if not fs[host]:
                del fs[host]
            if host != g:
                c, shift, rest = normalize_factor(poly_exact_div(host, g))
                num = num.shift(-shift).scale(Fraction(1) / Fraction(c))
                if not rest.is_one():
                    fs[rest] = fs.get(rest, 0) + 1
            changed = True
    return RationalFn._raw(num, fs)


def series_expand(a: RationalFn, series_var: str, order: int) -> list[MultiPoly]:
    """Coefficients c_0..c_order of the power series of ``a`` in ``series_var``.

    The numerator series is divided by one denominator factor at a time,
    which keeps every step sparse.  Each division is exact, so non-unit
    constant terms are allowed whenever the coefficients are polynomial;
    otherwise :class:`NotDivisible` is raised.
    """
    if not isinstance(a, RationalFn):
        a = RationalFn(a)
    vt = a.vt
    if order < 0:
        raise ValueError("order must be non-negative")
    num = a.num
    factors = a.factor_list()
    unit = vt.unit(series_var)
    low = sum(f.min_degree_in(series_var) for f in factors)
    if factors and low:
        num = num.shift(-low * unit)
        factors = [f.shift(-f.min_degree_in(series_var) * unit) for f in factors]
    if not num.is_zero() and num.min_degree_in(series_var) < 0:
        raise DenominatorNotUnitAtOrigin("expansion has negative powers of the series variable")
    n = num.coeffs_in(series_var)
    series = [n.get(k, MultiPoly(vt)) for k in range(order + 1)]
    for f in factors:
        d = f.coeffs_in(series_var)
        d0 = d.get(0)
        if d0 is None or d0.is_zero():
            raise DenominatorNotUnitAtOrigin("denominator vanishes at the origin")
        steps = sorted((j, c) for j, c in d.items() if 0 < j <= order)
        out: list[MultiPoly] = []
        for k in range(order + 1):
            acc = series[k]
            for j, dj in steps:
                if j > k:
                    break
                if not out[k - j].is_zero():
                    acc = acc - dj * out[k - j]
            out.append(acc if d0.is_one() else poly_exact_div(acc, d0))
        series = out
    return series


# --------------------------------------------------------------------------
# text parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^(){}]))")


class _Parser:
    """Recursive-descent reader for expressions such as
    ``(1 - x0^2*x1*x2/p X^2)`` ; juxtaposition means multiplication."""

    def __init__(self, text: str, vt: VarTable):
        self.vt = vt
        self.toks: list[tuple[str, str]] = []
        pos = 0
        text = text.replace("−", "-")
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"cannot parse {text[pos:pos + 20]!r}")
            num, name, op = m.groups()
            if num is not None:
                self.toks.append(("num", num))
            elif name is not None:
                self.toks.append(("name", name))
            else:
                self.toks.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if value is not None and tok[1] != value:
            raise ValueError(f"expected {value!r}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self) -> MultiPoly:
        out = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input at token {self.peek()}")
        return out

    def expr(self) -> MultiPoly:
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        out = self.term().scale(sign)
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def term(self) -> MultiPoly:
        out = self.factor()
        while True:
            kind, val = self.peek()
            if val == "*":
                self.take()
                out = out * self.factor()
            elif val == "/":
                self.take()
                d = self.factor()
                out = poly_exact_div(out, d) if len(d) != 1 else out * d ** -1
            elif kind in ("num", "name") or val in ("(", "{"):
                out = out * self.factor()
            else:
                return out

    def factor(self) -> MultiPoly:
        base = self.atom()
        while self.peek()[1] == "^":
            self.take()
            base = base ** self.int_exponent()
        return base

    def int_exponent(self) -> int:
        kind, val = self.peek()
        if val in ("(", "{"):
            self.take()
            e = self.expr()
            self.take(")" if val == "(" else "}")
            if not (len(e) <= 1 and e.variables() == set()):
                raise ValueError("exponent must be an integer")
            c = e.constant_term()
            if Fraction(c).denominator != 1:
                raise ValueError("exponent must be an integer")
            return int(c)
        sign = 1
        if val == "-":
            self.take()
            sign = -1
        kind, val = self.take()
        if kind != "num":
            raise ValueError("exponent must be an integer")
        return sign * int(val)

    def atom(self) -> MultiPoly:
        kind, val = self.take()
        if kind == "num":
            return MultiPoly.const(int(val), self.vt)
        if kind == "name":
            if val not in self.vt.index:
                raise ValueError(f"unknown variable {val!r}")
            return MultiPoly.var(val, self.vt)
        if val in ("(", "{"):
            e = self.expr()
            self.take(")" if val == "(" else "}")
            return e
        if val == "-":
            return -self.factor()
        raise ValueError(f"unexpected token {val!r}")

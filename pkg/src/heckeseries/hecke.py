"""Polynomials in the Hecke generators, their spherical images, and the
inverse of the spherical map on Weyl-invariant Laurent polynomials."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .arith import MultiPoly, RationalFn, VarTable, poly_exact_div
from .errors import (
    AlphabetMismatch, NotDivisible, NotHomogeneous, NotInImage, NotInvariant, UnsupportedGenus,
)
from .spherical import SphericalContext, is_weyl_invariant, omega_generator_images

SINGLE = {1: ("T", "P"), 2: ("T", "T1", "P")}
WEIGHT = {"T": 1, "T1": 2, "P": 2}


def _tensor_names(genus: int) -> tuple[str, ...]:
    gens = SINGLE[genus]
    return tuple(f"{g}⊗1" for g in gens) + tuple(f"1⊗{g}" for g in gens)


ALPHABETS = {
    "genus1": SINGLE[1],
    "genus2": SINGLE[2],
    "genus1-tensor": _tensor_names(1),
    "genus2-tensor": _tensor_names(2),
}
P_ONLY = VarTable(("p",))


@lru_cache(maxsize=None)
def alphabet_table(alphabet: str) -> VarTable:
    if alphabet not in ALPHABETS:
        raise AlphabetMismatch(f"unknown alphabet {alphabet!r}")
    return VarTable(("p",) + ALPHABETS[alphabet])


class HeckeElement:
    """Commutative polynomial in the generators of one alphabet with
    coefficients in Q[p, 1/p]."""

    __slots__ = ("alphabet", "poly")

    def __init__(self, alphabet: str, poly: MultiPoly | None = None):
        vt = alphabet_table(alphabet)
        if poly is None:
            poly = MultiPoly(vt)
        elif poly.vt != vt:
            raise AlphabetMismatch(f"polynomial table {poly.vt} does not match {alphabet}")
        self.alphabet = alphabet
        self.poly = poly

    @property
    def is_tensor(self) -> bool:
        return self.alphabet.endswith("-tensor")

    @property
    def genus(self) -> int:
        return int(self.alphabet[5])

    @classmethod
    def gen(cls, alphabet: str, name: str) -> "HeckeElement":
        return cls(alphabet, MultiPoly.var(name, alphabet_table(alphabet)))

    @classmethod
    def const(cls, alphabet: str, c=1) -> "HeckeElement":
        return cls(alphabet, MultiPoly.const(c, alphabet_table(alphabet)))

    @classmethod
    def parse(cls, alphabet: str, text: str) -> "HeckeElement":
        """Read a single-genus element such as ``"p*T1 + p*(p^2+1)*P"``;
        tensor elements use :func:`parse_tensor`."""
        if alphabet.endswith("-tensor"):
            return parse_tensor(alphabet, text)
        return cls(alphabet, MultiPoly.parse(text, alphabet_table(alphabet)))

    @classmethod
    def from_terms(cls, alphabet: str, terms: Iterable[tuple[Mapping[str, int], MultiPoly]]) -> "HeckeElement":
        vt = alphabet_table(alphabet)
        out = MultiPoly(vt)
        for gens, coef in terms:
            coef = coef.to_vartable(vt) if isinstance(coef, MultiPoly) else MultiPoly.const(coef, vt)
            out = out + coef * MultiPoly.monomial(gens, 1, vt)
        return cls(alphabet, out)

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "HeckeElement":
        if isinstance(other, HeckeElement):
            if other.alphabet != self.alphabet:
                raise AlphabetMismatch(f"{self.alphabet} vs {other.alphabet}")
            return other
        if isinstance(other, (int, Fraction)):
            return HeckeElement.const(self.alphabet, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HeckeElement(self.alphabet, self.poly + other.poly)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HeckeElement(self.alphabet, self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return HeckeElement(self.alphabet, -self.poly)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HeckeElement(self.alphabet, self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return HeckeElement(self.alphabet, self.poly ** e)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = HeckeElement.const(self.alphabet, other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.alphabet == other.alphabet and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.alphabet, self.poly))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def subs_p(self, value) -> "HeckeElement":
        return HeckeElement(self.alphabet, self.poly.subs({"p": value}))

    # inspection -------------------------------------------------------------
    def terms(self) -> list[tuple[dict[str, int], MultiPoly]]:
        """Generator exponents with their coefficient polynomial in ``p``,
        in canonical order."""
        vt = self.poly.vt
        by_gens: dict[int, dict[int, Fraction]] = {}
        for k, c in self.poly.items():
            e = vt.exponent(k, 0)
            gk = k - e * vt.unit("p")
            by_gens.setdefault(gk, {})[P_ONLY.encode((e,))] = c
        out = []
        for gk in sorted(by_gens, key=vt.order_key, reverse=True):
            exps = {n: e for n, e in zip(vt.names, vt.decode(gk)) if e}
            out.append((exps, MultiPoly(P_ONLY, by_gens[gk])))
        return out

    def min_p_exponent(self) -> int:
        return self.poly.min_degree_in("p")

    def weight(self) -> tuple[int, ...] | None:
        """Common generator weight (per tensor side); None if inhomogeneous."""
        seen = {_gen_weight(self.alphabet, g) for g, _ in self.terms()}
        return seen.pop() if len(seen) == 1 else None

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for gens, coef in self.terms():
            mono = _gens_str(self.alphabet, gens)
            if coef.is_one():
                body = mono or "1"
            elif coef == -1:
                body = "-" + (mono or "1")
            elif len(coef) == 1 and coef.leading_coefficient() > 0:
                body = f"{coef}*{mono}" if mono else str(coef)
            else:
                body = f"({coef})*{mono}" if mono else f"({coef})"
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"HeckeElement[{self.alphabet}]({self})"

    def to_json(self) -> dict:
        return {"alphabet": self.alphabet,
                "terms": [{"gens": g, "coef": c.to_json()} for g, c in self.terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "HeckeElement":
        return cls.from_terms(data["alphabet"],
                              ((t["gens"], MultiPoly.from_json(t["coef"])) for t in data["terms"]))


def _gen_weight(alphabet: str, gens: Mapping[str, int]) -> tuple[int, ...]:
    if alphabet.endswith("-tensor"):
        left = sum(WEIGHT[g[:-2]] * e for g, e in gens.items() if g.endswith("⊗1"))
        right = sum(WEIGHT[g[2:]] * e for g, e in gens.items() if g.startswith("1⊗"))
        return (left, right)
    return (sum(WEIGHT[g] * e for g, e in gens.items()),)


def _side_str(gens: Mapping[str, int], order: Sequence[str]) -> str:
    out = []
    for g in order:
        e = gens.get(g, 0)
        if e == 1:
            out.append(g)
        elif e:
            out.append(f"{g}^{e}")
    return "*".join(out)


def _gens_str(alphabet: str, gens: Mapping[str, int]) -> str:
    if not alphabet.endswith("-tensor"):
        return _side_str(gens, ALPHABETS[alphabet])
    single = SINGLE[int(alphabet[5])]
    left = _side_str({g[:-2]: e for g, e in gens.items() if g.endswith("⊗1")}, single)
    right = _side_str({g[2:]: e for g, e in gens.items() if g.startswith("1⊗")}, single)
    if not left and not right:
        return ""
    return f"{left or '1'}⊗{right or '1'}"


def tensor(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """``a ⊗ b`` for single-genus elements of the same genus; the ``p``
    coefficients of both sides are multiplied."""
    if a.is_tensor or b.is_tensor or a.alphabet != b.alphabet:
        raise AlphabetMismatch("tensor needs two single-genus elements of equal genus")
    alphabet = f"{a.alphabet}-tensor"
    vt = alphabet_table(alphabet)
    left = {g: f"{g}⊗1" for g in ALPHABETS[a.alphabet]}
    right = {g: f"1⊗{g}" for g in ALPHABETS[a.alphabet]}

    def lift(x: HeckeElement, names: Mapping[str, str]) -> MultiPoly:
        src = x.poly.vt
        out = {}
        for k, c in x.poly.items():
            exps = {}
            for n, e in zip(src.names, src.decode(k)):
                if e:
                    exps[names.get(n, n)] = e
            out[vt.encode(exps)] = c
        return MultiPoly(vt, out)

    return HeckeElement(alphabet, lift(a, left) * lift(b, right))


# tensor notation ------------------------------------------------------------

class AmbiguousTensor(ValueError):
    """A generator product is followed by a second ``⊗``."""


_TTOK = re.compile(r"\s*(?:(\d+)|(T1|T|P|p)|(⊗|[-+*^()]))")


def parse_tensor(alphabet: str, text: str) -> HeckeElement:
    """Read tensor notation like ``p^2(T1⊗P + P⊗T1) T^2 P⊗T^2 P``.

    A tensor monomial is a maximal run of generator powers, ``⊗``, and
    another maximal run.  Juxtaposition multiplies.
    """
    if not alphabet.endswith("-tensor"):
        raise AlphabetMismatch("parse_tensor needs a tensor alphabet")
    single = alphabet[:-7]
    allowed = set(ALPHABETS[single])
    toks = []
    pos = 0
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TTOK.match(text, pos)
        if not m:
            raise ValueError(f"cannot read {text[pos:pos + 20]!r}")
        toks.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    i = 0

    def peek():
        return toks[i] if i < len(toks) else None

    def take(expected=None):
        nonlocal i
        tok = peek()
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, got {tok!r} in {text!r}")
        i += 1
        return tok

    def exponent() -> int:
        if peek() == "^":
            take()
            tok = take()
            if not tok.isdigit():
                raise ValueError("exponents must be non-negative integers")
            return int(tok)
        return 1

    def genrun() -> HeckeElement:
        out = HeckeElement.const(single)
        seen = False
        while peek() in ("T", "T1", "P"):
            g = take()
            if g not in allowed:
                raise AlphabetMismatch(f"{g} is not a generator of {single}")
            out = out * HeckeElement.gen(single, g) ** exponent()
            seen = True
        if not seen:
            raise ValueError(f"expected a generator in {text!r}")
        return out

    def expr() -> HeckeElement:
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        out = term() * sign
        while peek() in ("+", "-"):
            op = take()
            t = term()
            out = out + t if op == "+" else out - t
        return out

    def term() -> HeckeElement:
        out = factor()
        while True:
            tok = peek()
            if tok == "*":
                take()
                out = out * factor()
            elif tok is not None and (tok.isdigit() or tok in ("p", "(", "T", "T1", "P")):
                out = out * factor()
            else:
                return out

    def factor() -> HeckeElement:
        tok = peek()
        if tok in ("T", "T1", "P"):
            left = genrun()
            take("⊗")
            right = genrun()
            if peek() == "⊗":
                raise AmbiguousTensor(f"chained tensor product in {text!r}")
            base = tensor(left, right)
        else:
            base = atom()
        return base ** exponent()

    def atom() -> HeckeElement:
        tok = take()
        if tok is None:
            raise ValueError(f"unexpected end of {text!r}")
        if tok.isdigit():
            return HeckeElement.const(alphabet, int(tok))
        if tok == "p":
            return HeckeElement.gen(alphabet, "p")
        if tok == "(":
            e = expr()
            take(")")
            return e
        raise ValueError(f"unexpected {tok!r} in {text!r}")

    result = expr()
    if i != len(toks):
        raise ValueError(f"unbalanced or trailing input at token {peek()!r} in {text!r}")
    return result


# spherical map ----------------------------------------------------------------

class SatakeMap:
    """Spherical map on one alphabet, for one variable group (single genus)
    or an ordered pair of groups (tensor square).

    With ``prime`` set, ``p`` is replaced by that integer everywhere, which
    gives a quick numeric pre-check of the symbolic computations.
    """

    def __init__(self, ctx: SphericalContext | tuple[SphericalContext, SphericalContext],
                 prime: int | None = None):
        if isinstance(ctx, tuple):
            cx, cy = ctx
            if cx.genus != cy.genus or cx.group == cy.group:
                raise AlphabetMismatch("tensor contexts need equal genus and distinct groups")
            self.contexts = (cx, cy)
            self.alphabet = f"genus{cx.genus}-tensor"
        else:
            self.contexts = (ctx,)
            self.alphabet = f"genus{ctx.genus}"
        self.genus = self.contexts[0].genus
        self.prime = prime
        self.vt = self.contexts[0].vt
        images: dict[str, MultiPoly] = {}
        for side, c in enumerate(self.contexts):
            for g, img in omega_generator_images(c).items():
                poly = img.to_poly()
                if prime is not None:
                    poly = poly.subs({c.prime: prime})
                name = g if len(self.contexts) == 1 else (f"{g}⊗1" if side == 0 else f"1⊗{g}")
                images[name] = poly
        self.images = images
        self._pow: dict[tuple[str, int], MultiPoly] = {}
        self._basis: dict[tuple[int, int], dict] = {}

    def _image_power(self, g: str, e: int) -> MultiPoly:
        key = (g, e)
        if key not in self._pow:
            self._pow[key] = self.images[g] ** e
        return self._pow[key]

    def scalar(self, coef: MultiPoly) -> MultiPoly:
        """Move a coefficient in ``p`` into the target table."""
        vt = self.vt
        p = self.contexts[0].prime
        out = MultiPoly(vt)
        for k, c in coef.items():
            e = coef.vt.exponent(k, 0)
            if self.prime is None:
                out = out + MultiPoly(vt, {vt.encode({p: e}) if e else 0: c})
            else:
                out = out + MultiPoly.const(Fraction(self.prime) ** e * c, vt)
        return out

    def omega_poly(self, e: HeckeElement) -> MultiPoly:
        if e.alphabet != self.alphabet:
            raise AlphabetMismatch(f"element in {e.alphabet}, map on {self.alphabet}")
        total = MultiPoly(self.vt)
        for gens, coef in e.terms():
            piece = self.scalar(coef)
            for g in sorted(gens):
                piece = piece * self._image_power(g, gens[g])
            total = total + piece
        return total

    def omega(self, e: HeckeElement) -> RationalFn:
        return RationalFn(self.omega_poly(e))

    # basis of one side -----------------------------------------------------
    def _side_basis(self, side: int, w: int) -> dict:
        """Generator monomials of weight ``w`` on one side, keyed by the
        lexicographically leading (z1..zg) exponent of their image."""
        key = (side, w)
        if key in self._basis:
            return self._basis[key]
        ctx = self.contexts[side]
        gens = SINGLE[self.genus]
        single_images = {g: self.images[g if len(self.contexts) == 1 else
                                        (f"{g}⊗1" if side == 0 else f"1⊗{g}")] for g in gens}
        table: dict[tuple[int, ...], tuple] = {}
        for exps in _weight_exponents(gens, w):
            img = MultiPoly.one(self.vt)
            for g, e in zip(gens, exps):
                if e:
                    img = img * single_images[g] ** e
            split = _split_by_lead(img, ctx)
            lead = max(split)
            table[lead] = (exps, split, split[lead])
        self._basis[key] = table
        return table

    def _solve_side(self, f: MultiPoly, side: int, w: int) -> dict[tuple, MultiPoly]:
        """Write ``f`` as ``sum_B Omega(B) * c_B`` with ``B`` of weight ``w``
        on the given side and ``c_B`` free of that side's variables."""
        ctx = self.contexts[side]
        rest = _split_by_lead(f, ctx, weight=w)
        basis = self._side_basis(side, w)
        out: dict[tuple, MultiPoly] = {}
        while rest:
            lead = max(rest)
            if lead not in basis:
                raise NotInImage(f"leading exponent {lead} is not the image of a weight-{w} monomial")
            exps, split, lc = basis[lead]
            coef = poly_exact_div(rest[lead], lc)
            out[exps] = coef
            for k, v in split.items():
                cur = rest.get(k)
                new = -(v * coef) if cur is None else cur - v * coef
                if new.is_zero():
                    rest.pop(k, None)
                else:
                    rest[k] = new
        return out

    def inverse(self, f, weights: int | tuple[int, ...], check_invariant: bool = True) -> HeckeElement:
        """Triangular inverse: repeatedly remove the basis image whose lead
        matches the current lead of ``f``."""
        f = _as_poly(f)
        if isinstance(weights, int):
            weights = (weights,)
        if len(weights) != len(self.contexts):
            raise AlphabetMismatch("one weight per variable group is required")
        if check_invariant:
            for c in self.contexts:
                if not is_weyl_invariant(c, f):
                    raise NotInvariant(f"not invariant under the Weyl group of {c.group}")
        for c, w in zip(self.contexts, weights):
            _check_homogeneous(f, c, w)
        gens = SINGLE[self.genus]
        first = self._solve_side(f, 0, weights[0])
        pieces: list[tuple[dict, MultiPoly]] = []
        if len(self.contexts) == 1:
            for exps, coef in first.items():
                pieces.append(({g: e for g, e in zip(gens, exps) if e}, coef))
        else:
            for exps, coef in first.items():
                for exps2, c2 in self._solve_side(coef, 1, weights[1]).items():
                    gen_exps = {f"{g}⊗1": e for g, e in zip(gens, exps) if e}
                    gen_exps.update({f"1⊗{g}": e for g, e in zip(gens, exps2) if e})
                    pieces.append((gen_exps, c2))
        return HeckeElement.from_terms(self.alphabet, ((g, _p_only(c, self)) for g, c in pieces))

    def inverse_bareiss(self, f, weight: int, check_invariant: bool = True) -> HeckeElement:
        """Inverse by fraction-free elimination on the full linear system
        (single genus only)."""
        if len(self.contexts) != 1:
            raise AlphabetMismatch("the elimination solver handles one variable group")
        ctx = self.contexts[0]
        f = _as_poly(f)
        if check_invariant and not is_weyl_invariant(ctx, f):
            raise NotInvariant("not Weyl invariant")
        _check_homogeneous(f, ctx, weight)
        gens = SINGLE[self.genus]
        columns = sorted(_weight_exponents(gens, weight), reverse=True)
        images = []
        for exps in columns:
            img = MultiPoly.one(self.vt)
            for g, e in zip(gens, exps):
                if e:
                    img = img * self.images[g] ** e
            images.append(_split_x(img, ctx))
        target = _split_x(f, ctx)
        rows = sorted(set().union(*images, target), key=self.vt.order_key, reverse=True)
        matrix = [[img.get(r, MultiPoly(self.vt)) for img in images] + [target.get(r, MultiPoly(self.vt))]
                  for r in rows]
        solution = bareiss_solve(matrix, len(columns))
        return HeckeElement.from_terms(
            self.alphabet,
            (({g: e for g, e in zip(gens, exps) if e}, _p_only(c, self))
             for exps, c in zip(columns, solution) if not c.is_zero()))


def _weight_exponents(gens: Sequence[str], w: int) -> list[tuple[int, ...]]:
    out = []
    ranges = [range(w // WEIGHT[g] + 1) for g in gens]
    for exps in product(*ranges):
        if sum(WEIGHT[g] * e for g, e in zip(gens, exps)) == w:
            out.append(exps)
    return out


def _as_poly(f) -> MultiPoly:
    if isinstance(f, RationalFn):
        try:
            return f.to_poly()
        except NotDivisible as exc:
            raise NotInImage("spherical images are Laurent polynomials") from exc
    return f


def _check_homogeneous(f: MultiPoly, ctx: SphericalContext, w: int) -> None:
    if f.is_zero():
        return
    i = ctx.vt.index[ctx.names[0]]
    degs = {ctx.vt.exponent(k, i) for k in f._t}
    if degs != {w}:
        raise NotHomogeneous(f"{ctx.names[0]}-degrees {sorted(degs)} differ from weight {w}")


def _split_by_lead(f: MultiPoly, ctx: SphericalContext, weight: int | None = None) -> dict[tuple, MultiPoly]:
    """Group terms by the (z1..zg) exponent; values keep every other variable."""
    vt = ctx.vt
    idx = [vt.index[n] for n in ctx.names]
    units = [vt._units[i] for i in idx]
    out: dict[tuple, dict[int, Fraction]] = {}
    for k, c in f.items():
        exps = tuple(vt.exponent(k, i) for i in idx)
        rest = k - sum(e * u for e, u in zip(exps, units))
        out.setdefault(exps[1:], {})[rest] = c
    return {e: MultiPoly(vt, t) for e, t in out.items()}


def _split_x(f: MultiPoly, ctx: SphericalContext) -> dict[int, MultiPoly]:
    """Group by the full spherical monomial of ``ctx``; values are in ``p``."""
    vt = ctx.vt
    idx = [vt.index[n] for n in ctx.names]
    units = [vt._units[i] for i in idx]
    out: dict[int, dict[int, Fraction]] = {}
    for k, c in f.items():
        xk = sum(vt.exponent(k, i) * u for i, u in zip(idx, units))
        out.setdefault(xk, {})[k - xk] = c
    return {xk: MultiPoly(vt, t) for xk, t in out.items()}


def _p_only(c: MultiPoly, smap: SatakeMap) -> MultiPoly:
    vt = c.vt
    p = smap.contexts[0].prime
    pi = vt.index[p]
    out = {}
    for k, v in c.items():
        e = vt.exponent(k, pi)
        if k - e * vt._units[pi]:
            raise NotInImage("a coefficient still depends on spherical variables")
        out[P_ONLY.encode((e,))] = v
    return MultiPoly(P_ONLY, out)


def bareiss_solve(matrix: list[list[MultiPoly]], ncols: int) -> list[MultiPoly]:
    """Solve ``A x = b`` (``b`` is the last column) over Laurent polynomials
    by fraction-free elimination; the solution must be polynomial."""
    m = [row[:] for row in matrix]
    nrows = len(m)
    prev = None
    pivot_rows = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if not m[i][col].is_zero()), None)
        if pivot is None:
            raise NotInImage("basis images are linearly dependent")
        m[r], m[pivot] = m[pivot], m[r]
        piv = m[r][col]
        for i in range(r + 1, nrows):
            for j in range(col + 1, ncols + 1):
                val = piv * m[i][j] - m[i][col] * m[r][j]
                m[i][j] = val if prev is None else poly_exact_div(val, prev)
            m[i][col] = MultiPoly(piv.vt)
        prev = piv
        pivot_rows.append(r)
        r += 1
    for i in range(r, nrows):
        if not m[i][ncols].is_zero():
            raise NotInImage("linear system is inconsistent")
    x: list[MultiPoly] = [MultiPoly(prev.vt) for _ in range(ncols)] if prev else []
    for col in reversed(range(ncols)):
        row = m[pivot_rows[col]]
        acc = row[ncols]
        for j in range(col + 1, ncols):
            if not row[j].is_zero():
                acc = acc - row[j] * x[j]
        try:
            x[col] = poly_exact_div(acc, row[col])
        except NotDivisible as exc:
            raise NotInImage("solution is not polynomial in p") from exc
    return x


def omega_apply(e: HeckeElement, ctx, prime: int | None = None) -> RationalFn:
    return SatakeMap(ctx, prime).omega(e)


def inverse_satake(f, weight: int, ctx: SphericalContext, method: str = "bareiss",
                   prime: int | None = None) -> HeckeElement:
    smap = SatakeMap(ctx, prime)
    if method == "bareiss":
        return smap.inverse_bareiss(f, weight)
    if method == "triangular":
        return smap.inverse(f, weight)
    raise ValueError(f"unknown method {method!r}")


def inverse_satake_tensor(f, weights: tuple[int, int], ctxs: tuple[SphericalContext, SphericalContext],
                          prime: int | None = None) -> HeckeElement:
    return SatakeMap(ctxs, prime).inverse(f, weights)


# series in X with Hecke coefficients ------------------------------------------

class HeckeSeriesPoly:
    """Polynomial ``sum_i c_i X^i`` with HeckeElement coefficients."""

    def __init__(self, coeffs: Sequence[HeckeElement]):
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> HeckeElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return HeckeElement(self.coeffs[0].alphabet)

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeSeriesPoly) and self.coeffs == other.coeffs

    def to_json(self) -> dict:
        return {"coeffs": [c.to_json() for c in self.coeffs]}

    def __str__(self) -> str:
        return "\n".join(f"X^{i}: {c}" for i, c in enumerate(self.coeffs) if not c.is_zero())


def series_omega(s: HeckeSeriesPoly, smap: SatakeMap, series_var: str = "X") -> MultiPoly:
    X = smap.vt.unit(series_var)
    total = MultiPoly(smap.vt)
    for i, c in enumerate(s.coeffs):
        if not c.is_zero():
            total = total + smap.omega_poly(c).shift(i * X)
    return total


def functional_equation_check(S: HeckeSeriesPoly, prime: int | None = None) -> list[bool]:
    """``s_{16-i} == (p^6 P⊗P)^(8-i) * s_i`` for ``i = 0..8``."""
    if S.degree != 16:
        raise ValueError(f"expected degree 16, got {S.degree}")
    pp = parse_tensor(S[0].alphabet, "p^6 P⊗P")
    if prime is not None:
        pp = pp.subs_p(prime)
    return [S[16 - i] == pp ** (8 - i) * S[i] for i in range(9)]


def shimura_series(genus: int) -> tuple[list[HeckeElement], list[HeckeElement]]:
    """Numerator and denominator coefficients (in X) of the generating series
    of T(p^delta) with Hecke generator coefficients."""
    a = f"genus{genus}"
    if genus == 1:
        return ([HeckeElement.const(a)],
                [HeckeElement.const(a), HeckeElement.parse(a, "-T"), HeckeElement.parse(a, "p*P")])
    if genus == 2:
        num = [HeckeElement.const(a), HeckeElement(a), HeckeElement.parse(a, "-p^2*P")]
        den = [HeckeElement.const(a), HeckeElement.parse(a, "-T"),
               HeckeElement.parse(a, "p*T1 + p*(p^2+1)*P"),
               HeckeElement.parse(a, "-p^3*P*T"), HeckeElement.parse(a, "p^6*P^2")]
        return num, den
    raise UnsupportedGenus(f"no generator form for genus {genus}")


def omega_series(coeffs: Sequence[HeckeElement], smap: SatakeMap, series_var: str = "X") -> MultiPoly:
    return series_omega(HeckeSeriesPoly(coeffs), smap, series_var)


# Newton polygons ----------------------------------------------------------------

class NewtonPolygon:
    """Lower convex hull of the points ``(i, v(c_i))``."""

    def __init__(self, vertices: Sequence[tuple[int, int]]):
        self.vertices = [tuple(v) for v in vertices]

    @property
    def slopes(self) -> list[Fraction]:
        return [Fraction(b[1] - a[1], b[0] - a[0]) for a, b in zip(self.vertices, self.vertices[1:])]

    def slopes_integral(self) -> bool:
        return all(s.denominator == 1 for s in self.slopes)

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices],
                "slopes": [str(s) for s in self.slopes]}

    def __repr__(self) -> str:
        return f"NewtonPolygon({self.vertices})"


def lower_hull(points: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Monotone-chain lower hull; collinear middle points are dropped."""
    pts = sorted(set(points))
    hull: list[tuple[int, int]] = []
    for pt in pts:
        if hull and hull[-1][0] == pt[0]:
            continue
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _padic(c: Fraction, prime: int) -> int:
    c = Fraction(c)
    v = 0
    n, d = c.numerator, c.denominator
    while n % prime == 0:
        n //= prime
        v += 1
    while d % prime == 0:
        d //= prime
        v -= 1
    return v


def newton_polygon(poly: HeckeSeriesPoly, valuation: str = "min-p-degree",
                   prime: int | None = None) -> NewtonPolygon:
    """Valuation of a coefficient is the least exponent of ``p`` among its
    terms, or with ``valuation="p-adic"`` the least ``prime``-adic valuation
    of its rational coefficients (for series computed at a numeric prime)."""
    if valuation == "min-p-degree":
        val = HeckeElement.min_p_exponent
    elif valuation == "p-adic":
        if prime is None:
            raise ValueError("p-adic valuation needs a prime")
        val = lambda c: min(_padic(v, prime) for _, v in c.poly.items())
    else:
        raise ValueError(f"unknown valuation {valuation!r}")
    points = [(i, val(c)) for i, c in enumerate(poly.coeffs) if not c.is_zero()]
    if not points:
        raise ValueError("zero polynomial has no Newton polygon")
    return NewtonPolygon(lower_hull(points))

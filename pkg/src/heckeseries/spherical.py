"""Images of the symplectic Hecke generators under the Satake spherical map,
the generating series built from them, and the Weyl group action."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .arith import DEFAULT_VARS, Monomial, MultiPoly, RationalFn, VarTable, poly_product, rf_equal
from .deltaseries import DeltaSeries, delta_power_substitute, partial_fractions, resum
from .errors import UnsupportedGenus


@dataclass(frozen=True)
class SphericalContext:
    """Genus plus the variable family ``z0, z1, ..., zg`` the images live in."""

    genus: int
    group: str = "x"
    vt: VarTable = DEFAULT_VARS
    prime: str = "p"
    series_var: str = "X"

    def __post_init__(self):
        if self.genus < 1:
            raise UnsupportedGenus(f"genus must be positive, got {self.genus}")
        missing = [n for n in self.names if n not in self.vt.index]
        if missing:
            raise UnsupportedGenus(f"variables {missing} are not in the table")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(f"{self.group}{i}" for i in range(self.genus + 1))

    def z(self, i: int) -> MultiPoly:
        return MultiPoly.var(self.names[i], self.vt)

    def key(self, exps: Sequence[int], p: int = 0) -> int:
        """Packed monomial ``p**p * prod z_i**exps[i]``."""
        d = {n: e for n, e in zip(self.names, exps) if e}
        if p:
            d[self.prime] = p
        return self.vt.encode(d)

    def mono(self, exps: Sequence[int], p: int = 0, coef=1) -> MultiPoly:
        return MultiPoly(self.vt, {self.key(exps, p): coef})

    @property
    def p(self) -> MultiPoly:
        return MultiPoly.var(self.prime, self.vt)

    @property
    def X(self) -> MultiPoly:
        return MultiPoly.var(self.series_var, self.vt)


def _require(ctx: SphericalContext, *genera: int) -> None:
    if ctx.genus not in genera:
        raise UnsupportedGenus(f"genus {ctx.genus} is not supported here (need {genera})")


def omega_generator_images(ctx: SphericalContext) -> dict[str, RationalFn]:
    """``T`` = T(p), ``T1`` = T_1(p^2), ``P`` = [p] (genus 2) or [p]_1 (genus 1)."""
    _require(ctx, 1, 2)
    one = MultiPoly.one(ctx.vt)
    if ctx.genus == 1:
        return {
            "T": RationalFn(ctx.z(0) * (one + ctx.z(1))),
            "P": RationalFn(ctx.mono((2, 1), p=-1)),
        }
    x0, x1, x2, p = ctx.z(0), ctx.z(1), ctx.z(2), ctx.p
    t1_inner = (x1 * x1 * x2 + x1 * x2 * x2) * p * p + x1 * x2 * p * p - x1 * x2 + (x1 + x2) * p * p
    return {
        "T": RationalFn(x0 * (one + x1) * (one + x2)),
        "T1": RationalFn(x0 * x0 * t1_inner * p ** -3),
        "P": RationalFn(ctx.mono((2, 1, 1), p=-3)),
    }


def spinor_factors(ctx: SphericalContext) -> list[MultiPoly]:
    """The ``2**g`` factors ``1 - z0 * prod_{i in S} z_i * X``, subsets by size."""
    g = ctx.genus
    out = []
    X = ctx.vt.unit(ctx.series_var)
    for r in range(g + 1):
        for subset in combinations(range(1, g + 1), r):
            exps = [1] + [1 if i in subset else 0 for i in range(1, g + 1)]
            out.append(MultiPoly(ctx.vt, {0: 1, ctx.key(exps) + X: -1}))
    return out


def spinor_denominator(genus: int, group: str = "x", series_var: str = "X",
                       vt: VarTable = DEFAULT_VARS) -> list[MultiPoly]:
    return spinor_factors(SphericalContext(genus, group, vt, series_var=series_var))


def andrianov_series_genus2(ctx: SphericalContext) -> RationalFn:
    """Sum of the images of T(p^delta) X^delta in closed form."""
    _require(ctx, 2)
    X2 = 2 * ctx.vt.unit(ctx.series_var)
    num = MultiPoly(ctx.vt, {0: 1, ctx.key((2, 1, 1), p=-1) + X2: -1})
    return RationalFn.from_factors(num, spinor_factors(ctx))


def genus1_series(ctx: SphericalContext) -> RationalFn:
    _require(ctx, 1)
    return RationalFn.from_factors(MultiPoly.one(ctx.vt), spinor_factors(ctx))


def genus2_delta_form(ctx: SphericalContext) -> DeltaSeries:
    return partial_fractions(andrianov_series_genus2(ctx), ctx.series_var)


def genus1_delta_form(ctx: SphericalContext) -> DeltaSeries:
    _require(ctx, 1)
    one = MultiPoly.one(ctx.vt)
    x1 = ctx.z(1)
    return DeltaSeries(ctx.vt, [
        (RationalFn(one, one - x1), Monomial(ctx.vt, ctx.key((1, 0)))),
        (RationalFn(-x1, one - x1), Monomial(ctx.vt, ctx.key((1, 1)))),
    ])


def power_series_closed_form(ctx: SphericalContext, m: int) -> RationalFn:
    """Closed form of ``sum_delta Omega(T(p^(m*delta))) X^delta``."""
    _require(ctx, 2)
    return resum(delta_power_substitute(genus2_delta_form(ctx), m), ctx.series_var)


# Weyl group ---------------------------------------------------------------

def weyl_bindings(ctx: SphericalContext, element: tuple) -> dict[str, Monomial]:
    """``("swap", i, j)`` exchanges z_i and z_j; ``("sigma", i)`` sends
    z_i to 1/z_i and z0 to z0*z_i."""
    _require(ctx, 1, 2)
    vt, names = ctx.vt, ctx.names
    kind = element[0]
    if kind == "swap":
        _, i, j = element
        if not (1 <= i <= ctx.genus and 1 <= j <= ctx.genus):
            raise ValueError(f"bad transposition {element}")
        return {names[i]: Monomial.of(vt, **{names[j]: 1}),
                names[j]: Monomial.of(vt, **{names[i]: 1})}
    if kind == "sigma":
        _, i = element
        if not 1 <= i <= ctx.genus:
            raise ValueError(f"bad inversion {element}")
        return {names[i]: Monomial.of(vt, **{names[i]: -1}),
                names[0]: Monomial.of(vt, **{names[0]: 1, names[i]: 1})}
    raise ValueError(f"unknown Weyl element {element!r}")


def weyl_generators(ctx: SphericalContext) -> list[tuple]:
    gens = [("sigma", i) for i in range(1, ctx.genus + 1)]
    gens += [("swap", i, i + 1) for i in range(1, ctx.genus)]
    return gens


def weyl_apply(ctx: SphericalContext, element: tuple, f):
    return f.subs(weyl_bindings(ctx, element))


def is_weyl_invariant(ctx: SphericalContext, f) -> bool:
    for g in weyl_generators(ctx):
        image = weyl_apply(ctx, g, f)
        if isinstance(f, MultiPoly):
            if image != f:
                return False
        elif not rf_equal(image, f):
            return False
    return True


def spinor_product(ctx: SphericalContext) -> MultiPoly:
    return poly_product(spinor_factors(ctx))

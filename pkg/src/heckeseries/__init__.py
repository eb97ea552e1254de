"""Exact generating series of Hecke operators for genus 1 and 2, their
Rankin convolution, and local L-factor bookkeeping for lifts."""

from .arith import DEFAULT_VARS, MultiPoly, RationalFn, VarTable, rf_equal, series_expand
from .errors import HeckeSeriesError
from .hecke import HeckeElement, HeckeSeriesPoly, SatakeMap, newton_polygon, parse_tensor
from .lfactor import SatakeParams, hodge_spinor, hodge_tensor, spin_polynomial, standard_polynomial
from .rankin import verify_theorem21
from .rankin_hecke import derive_RS
from .spherical import SphericalContext
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_VARS", "MultiPoly", "RationalFn", "VarTable", "rf_equal", "series_expand",
    "HeckeSeriesError", "HeckeElement", "HeckeSeriesPoly", "SatakeMap", "newton_polygon",
    "parse_tensor", "SatakeParams", "hodge_spinor", "hodge_tensor", "spin_polynomial",
    "standard_polynomial", "verify_theorem21", "derive_RS", "SphericalContext", "run_suite",
]

"""Exception hierarchy shared by every module of the package."""


class HeckeSeriesError(Exception):
    """Base class for all errors raised by heckeseries."""


class MismatchedVarTable(HeckeSeriesError):
    pass


class NotDivisible(HeckeSeriesError):
    """An exact division was requested but the divisor does not divide.

    In verification code this is a meaningful failure (a claimed
    factorization is false), not a crash.
    """


class NonUnitBindingForInvertedVariable(HeckeSeriesError):
    pass


class DenominatorNotUnitAtOrigin(HeckeSeriesError):
    pass


class RepeatedBase(HeckeSeriesError):
    pass


class NotLinearFactorForm(HeckeSeriesError):
    pass


class UnsupportedGenus(HeckeSeriesError):
    pass


class AlphabetMismatch(HeckeSeriesError):
    pass


class NotInvariant(HeckeSeriesError):
    pass


class NotInImage(HeckeSeriesError):
    pass


class NotHomogeneous(HeckeSeriesError):
    pass


class UnsupportedSymbolicForm(HeckeSeriesError):
    pass


class NonInvertibleParameter(HeckeSeriesError):
    pass


class GenusMismatch(HeckeSeriesError):
    pass


class WeightMismatch(HeckeSeriesError):
    pass

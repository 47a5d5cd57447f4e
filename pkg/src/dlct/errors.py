"""Exception types raised by the library."""


class DlctError(Exception):
    """Base class for all library errors."""


class DimensionOutOfRange(DlctError, ValueError):
    pass


class ReducibleModulus(DlctError, ValueError):
    pass


class ZeroInverse(DlctError, ZeroDivisionError):
    pass


class LengthMismatch(DlctError, ValueError):
    pass


class EntryOutOfRange(DlctError, ValueError):
    pass


class ZeroMask(DlctError, ValueError):
    pass


class ZeroDirection(DlctError, ValueError):
    pass


class LengthNotPowerOfTwo(DlctError, ValueError):
    pass


class TooLarge(DlctError, ValueError):
    pass


class DomainError(DlctError, ValueError):
    pass


class NotMonomial(DlctError, ValueError):
    pass


class NotApn(DlctError, ValueError):
    pass


class NotPlateaued(DlctError, ValueError):
    pass


class NotInvertible(DlctError, ValueError):
    pass


class NotPermutation(DlctError, ValueError):
    pass


class BadParameters(DlctError, ValueError):
    pass


class AllZeroCoefficients(DlctError, ValueError):
    pass


class IndexOutOfRange(DlctError, IndexError):
    pass


class UnknownCheck(DlctError, KeyError):
    pass


class UnknownTarget(DlctError, KeyError):
    pass


class PredictionMismatch(DlctError, ArithmeticError):
    """A computed spectrum disagrees with the closed-form prediction."""

"""Exception types raised by the discrimination toolkit."""


class DiscriminationError(ValueError):
    """Base class for invalid-input errors."""


class NotHermitian(DiscriminationError):
    pass


class NotPositiveSemidefinite(DiscriminationError):
    pass


class TraceNotOne(DiscriminationError):
    pass


class DimensionMismatch(DiscriminationError):
    pass


class InvalidDetectionPair(DiscriminationError):
    pass


class BasisNotOrthonormal(DiscriminationError):
    pass


class InvalidPriors(DiscriminationError):
    pass


class ConvergenceFailure(ArithmeticError):
    """The dense Hermitian eigensolver failed or produced an inaccurate result."""

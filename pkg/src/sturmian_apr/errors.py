"""Exception types raised across the package."""


class SturmianError(Exception):
    """Base class for all errors raised by :mod:`sturmian_apr`."""


class IncompatibleFieldError(SturmianError, ValueError):
    """Two quadratic irrationals live in different fields Q(sqrt(d1)) != Q(sqrt(d2))."""


class RationalSlopeError(SturmianError, ValueError):
    """A rational slope was given where an irrational one is required."""


class InfiniteResult(SturmianError):
    """The requested set of abelian returns is infinite.

    Raised for the zero intercept: a Sturmian word has finitely many abelian
    returns to its prefixes exactly when its intercept is non-zero.
    """

    def __init__(self, message=None):
        super().__init__(message or
                         "the set of abelian returns to prefixes is infinite "
                         "for zero intercept (finite iff rho != 0)")


class IterationCapExceeded(SturmianError, RuntimeError):
    """Interval propagation did not finish within the configured step budget."""


class InsufficientData(SturmianError):
    """A scanned word is too short to contain enough occurrences of a factor class."""


class ParseError(SturmianError, ValueError):
    """Malformed textual input (field element, continued fraction or interval)."""

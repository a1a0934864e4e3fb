"""Exception types shared across the package."""


class ModcurveError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateInvolution(ModcurveError):
    pass


class NotSplit(ModcurveError):
    """A quadratic that was expected to split has a nonsquare discriminant."""


class Inconsistent(ModcurveError):
    """An overdetermined linear system has no solution."""


class PrecisionExhausted(ModcurveError):
    """Numeric square-root reconstruction was inconclusive at maximum precision."""


class PointNotOnCurve(ModcurveError):
    pass


class ExceedsBound(ModcurveError):
    pass


class ClosureBoundExceeded(ModcurveError):
    pass


class BadReduction(ModcurveError):
    pass


class NotIntegral(ModcurveError):
    """A denominator is divisible by the prime we are reducing modulo."""


class ValidationFailed(ModcurveError):
    pass

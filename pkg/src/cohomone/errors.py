"""Exception types raised across the package."""


class CohomOneError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(CohomOneError, ZeroDivisionError):
    pass


class UnsupportedAngle(CohomOneError, ValueError):
    """An angle whose cosine or sine leaves Q(sqrt 2)."""


class ClosureExceedsCap(CohomOneError):
    pass


class ParseError(CohomOneError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NotASubgroup(CohomOneError):
    pass


class NotASphere(CohomOneError):
    pass


class NonCanonicalizable(CohomOneError):
    pass


class NoRepresentative(CohomOneError):
    pass


class OrderExceedsCap(CohomOneError):
    pass


class NonIntegralEntry(CohomOneError, ValueError):
    pass


class FamilyMismatch(CohomOneError, ValueError):
    pass


class InternalInconsistency(CohomOneError, AssertionError):
    pass


class Unrecognized(CohomOneError):
    pass


class UnknownEntry(CohomOneError, KeyError):
    pass

"""Exception types raised across the package."""


class SkewError(Exception):
    """Base class for all library errors."""


class DivisionByZero(SkewError, ZeroDivisionError):
    pass


class ContextMismatch(SkewError, ValueError):
    pass


class NotEnumerable(SkewError, TypeError):
    pass


class NotAffine(SkewError, ValueError):
    pass


class UndefinedGcrd(SkewError, ValueError):
    pass


class InvalidLambda(SkewError, ValueError):
    pass


class HypothesisViolation(SkewError, ValueError):
    """A theorem check was called on inputs that do not meet its hypotheses.

    ``clause`` names the failed hypothesis so callers can report it.
    """

    def __init__(self, clause, message):
        super().__init__(f"{clause}: {message}")
        self.clause = clause


class NonEmptyVariety(SkewError, ValueError):
    def __init__(self, point):
        super().__init__(f"ideal has a common zero at {point}")
        self.point = point


class ZeroIdeal(SkewError, ValueError):
    pass


class ConsistencyFault(SkewError, AssertionError):
    """Two independent computations of the same quantity disagreed."""


class PolySyntaxError(SkewError, ValueError):
    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position
        self.text = text


class UnknownVariable(PolySyntaxError):
    pass


class CoefficientParseError(PolySyntaxError):
    pass

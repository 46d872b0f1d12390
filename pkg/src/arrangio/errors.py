"""Exception types raised across the package."""


class ArrangioError(Exception):
    """Base class for all library errors."""


class SpecMismatch(ArrangioError, TypeError):
    pass


class DivisionByZero(ArrangioError, ZeroDivisionError):
    pass


class NonInvertibleDenominator(ArrangioError, ValueError):
    pass


class IdenticalLines(ArrangioError, ValueError):
    pass


class IdenticalPoints(ArrangioError, ValueError):
    pass


class DuplicateLines(ArrangioError, ValueError):
    pass


class EmptyArrangement(ArrangioError, ValueError):
    pass


class TooFewLines(ArrangioError, ValueError):
    pass


class TooFewPoints(ArrangioError, ValueError):
    pass


class NotFullRank(ArrangioError, ValueError):
    pass


class NotModular(ArrangioError, ValueError):
    pass


class NotSupersolvable(ArrangioError, ValueError):
    pass


class MultiplicityTooSmall(ArrangioError, ValueError):
    pass


class HypothesisNotMet(ArrangioError, ValueError):
    pass


class ParameterOutOfRange(ArrangioError, ValueError):
    pass


class AllCollinear(ArrangioError, ValueError):
    pass


class InvalidConfig(ArrangioError, ValueError):
    pass


class DependentForms(ArrangioError, ValueError):
    pass


class InputFormatError(ArrangioError, ValueError):
    """A serialized document could not be decoded."""

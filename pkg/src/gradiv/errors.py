"""Exception types raised across the package."""


class GradivError(Exception):
    pass


class DivisionByZero(GradivError, ZeroDivisionError):
    pass


class NotReal(GradivError, ValueError):
    pass


class BadInput(GradivError, ValueError):
    pass


class TooLarge(GradivError):
    pass


class InconsistentPresentation(GradivError, ValueError):
    pass


class NotSimple(GradivError):
    pass


class NotSemisimple(NotSimple):
    pass


class NotDivision(GradivError):
    pass


class Unclassifiable(GradivError):
    pass


class NotMonomial(GradivError):
    pass


class NotSquareGroup(GradivError, ValueError):
    pass


class FormatError(GradivError, ValueError):
    """Malformed file content; ``field`` names the offending key."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class NotDivisionCompatible(UserWarning):
    """Homogeneous components of unequal dimension."""

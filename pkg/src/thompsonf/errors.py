"""Exception types raised by the toolkit.

Each class name doubles as the error name reported by the command line.
"""


class ThompsonError(Exception):
    """Base class for domain errors."""


class WordSyntaxError(ThompsonError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class IterationLimitExceeded(ThompsonError, RuntimeError):
    pass


class NotInF2(ThompsonError, ValueError):
    pass


class NotForbidden(ThompsonError, ValueError):
    pass


class InvalidShape(ThompsonError, ValueError):
    pass


class EqualInputs(ThompsonError, ValueError):
    pass


class BudgetExceeded(ThompsonError, RuntimeError):
    pass

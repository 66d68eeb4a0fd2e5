# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).
"""Exceptions raised by the library and translated to exit codes by the CLI."""


class UserError(Exception):
    """Problem with what the user handed in: unreadable instance files,
    missing fields, generator parameters out of range."""

    exit_code = 2

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class ValidationError(UserError):
    """A library call was made outside of its contract (index out of range,
    wrong sign of the inserted value, parameter below its lower bound...).
    The message names the condition that failed."""


class ScoreOverflowError(ValidationError, ArithmeticError):
    """Sums over the sequence could leave the configured signed range."""


class OracleLimitError(UserError):
    """The exhaustive oracle refuses instances larger than its limit."""

    def __init__(self, message, limit):
        super().__init__(message)
        self.limit = limit

    def __reduce__(self):
        return type(self), (self.message, self.limit)

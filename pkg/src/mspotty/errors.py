"""Exception hierarchy shared by all mspotty modules."""


class MSpottyError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(MSpottyError, ValueError):
    """Invalid argument: out-of-range parameter, mismatched ring or layout."""


class BudgetError(MSpottyError):
    """An enumeration would exceed its configured budget.

    `required` is the size of the space that would have to be scanned,
    `budget` the configured cap.
    """

    def __init__(self, message: str, required: int, budget: int):
        super().__init__(f"{message}: requires {required} > budget {budget}")
        self.required = required
        self.budget = budget


class IntegrityError(MSpottyError):
    """An exact-arithmetic consistency check failed (e.g. non-divisible
    transform numerator).  Signals a bug or an invalid input code, never
    a recoverable condition."""


class MatrixParseError(MSpottyError, ValueError):
    """Malformed matrix file.  `line` is 1-based; 0 means whole-file."""

    def __init__(self, message: str, line: int = 0):
        prefix = f"line {line}: " if line else ""
        super().__init__(prefix + message)
        self.line = line

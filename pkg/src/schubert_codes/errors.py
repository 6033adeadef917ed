"""Exception types raised across the package.

The CLI maps each class onto a process exit code (see ``cli.EXIT_CODES``).
"""


class SchubertError(Exception):
    """Base class for all package errors."""


class InvalidInput(SchubertError, ValueError):
    pass


class NotAPrimePower(InvalidInput):
    pass


class FieldTooLarge(InvalidInput):
    pass


class RangeError(InvalidInput):
    """A parameter lies outside the range where a formula is defined."""


class NotApplicable(SchubertError):
    """A closed form does not apply to the given tuple."""


class RankDeficient(SchubertError, ValueError):
    pass


class EnumerationBudgetExceeded(SchubertError):
    """Refusal to run an enumeration whose size exceeds the configured cap."""

    def __init__(self, what, size, budget):
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(f"{what}: {size} exceeds budget {budget}")


# short alias
BudgetExceeded = EnumerationBudgetExceeded


class NondegeneracyViolation(SchubertError, AssertionError):
    """A constructed generator matrix lost rank; indicates a bug."""

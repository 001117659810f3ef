class NtfkitError(Exception):
    """Base class for errors raised by ntfkit."""


class ContextMismatchError(NtfkitError, ValueError):
    """Operands live over different variable contexts."""


class ExponentOverflowError(NtfkitError, OverflowError):
    """An exponent left the supported machine-integer range."""


class InvalidIdealError(NtfkitError, ValueError):
    """The operation is undefined on this ideal (zero, unit, not square-free, ...)."""


class ParseError(NtfkitError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class BudgetExceededError(NtfkitError):
    """A brute-force search would exceed its configured budget."""


class HypothesisError(NtfkitError):
    """A check was refused because its hypotheses do not hold.

    ``conditions`` names every failed condition.
    """

    def __init__(self, conditions):
        self.conditions = tuple(conditions)
        super().__init__("hypotheses not satisfied: " + ", ".join(self.conditions))

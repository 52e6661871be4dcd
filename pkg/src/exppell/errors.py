"""Exception hierarchy shared by every exppell module."""

from __future__ import annotations


class ExppellError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class ParseError(ExppellError, ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class NonzeroConstantExponent(ExppellError, ValueError):
    """An exponent with a nonzero constant term was handed to the canonical form."""


class IndexTooLarge(ExppellError, ValueError):
    pass


class NotAPellSolution(ExppellError, ValueError):
    pass


class NonIntegerCoefficients(ExppellError, ValueError):
    pass


class DomainError(ExppellError, ValueError):
    pass


class EvaluationOverflow(ExppellError, ArithmeticError):
    pass


class BudgetExceeded(ExppellError, RuntimeError):
    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"bounded search exceeded its budget of {budget} candidates")


class DioSyntaxError(ParseError, SyntaxError):
    """A malformed Diophantine system; also catchable as SyntaxError."""

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(message, position, text)
        self.msg = f"{message} at position {position}"
        self.offset = position + 1

    __str__ = Exception.__str__

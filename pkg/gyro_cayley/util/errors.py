"""
This module contains the exceptions raised by gyro_cayley modules.
"""


class GyroError(Exception):
    """
    Base class of every error raised by gyro_cayley.
    """


class DomainError(GyroError, ValueError):
    """
    An argument is outside the domain of an operation. E.g., an element
    index out of range, an empty set, or the identity inside a generating set.
    """


class StructuralError(DomainError):
    """
    A Cayley table lacks the structure needed to derive gyrations
    (identity or inverses).
    """

    def __init__(self, msg, element=None):
        super().__init__(msg)
        self.element = element


class PreconditionError(DomainError):
    """
    An operation was called outside the precondition of the theorem
    it relies on.
    """


class ParseError(DomainError):
    """
    Malformed text. Carries the 1-based line and column of the problem.
    """

    def __init__(self, msg, line=None, column=None):
        self.msg = msg
        self.line = line
        self.column = column
        super().__init__(self._location() + msg)

    def _location(self):
        if self.line is None:
            return '' if self.column is None else f'column {self.column}: '
        if self.column is None:
            return f'line {self.line}: '
        return f'line {self.line}, column {self.column}: '


class ArgParseError(GyroError):
    """
    The command line could not be parsed.
    """


class VerificationError(DomainError):
    """
    A table failed the gyrogroup axioms. The failing report is attached.
    """

    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report

"""
Custom exceptions for falsilab.
"""

from typing import Optional


class FalsilabError(Exception):
    """Base exception for all library errors."""

    pass


class ValidationError(FalsilabError):
    """Exception for violated preconditions on inputs."""

    pass


class InvalidSubset(ValidationError):
    """Exception for duplicate or out-of-range subset elements."""

    pass


class InvalidAssignment(ValidationError):
    """Exception for malformed partial assignments."""

    pass


class BadPrefix(ValidationError):
    """Exception for sample prefixes that are not injective, out of range, or too short."""

    pass


class BadPattern(ValidationError):
    """Exception for outcome patterns of the wrong width or alphabet."""

    pass


class BadRange(ValidationError):
    """Exception for sizes or depths outside the ground set."""

    pass


class BadDescriptor(ValidationError):
    """Exception for invalid family descriptors or mismatched grounds."""

    pass


class BadParameter(ValidationError):
    """Exception for numeric parameters outside their admissible range."""

    pass


class EmptyParameterSet(ValidationError):
    """Exception for parameter sets with no admissible point."""

    pass


class CapExceeded(FalsilabError):
    """Exception raised when materialization or enumeration would exceed the configured budget."""

    pass


class EmptyClass(FalsilabError):
    """Exception raised when an operation is undefined on the empty class."""

    pass


class NotShatterable(FalsilabError):
    """Exception raised when no set of the requested size is shattered."""

    pass


class NoCrucialExperiment(FalsilabError):
    """Exception raised when the class shatters every subset of the free coordinates."""

    pass


class ZeroCondition(FalsilabError):
    """Exception raised when conditioning on a class of co-surprise zero."""

    pass


class ParseError(FalsilabError):
    """Exception for malformed class files or flag values, with an optional position."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            position = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{position}: {message}"
        super().__init__(message)

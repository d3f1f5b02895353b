"""Exception hierarchy shared by every layer of the package."""


class InvariantError(Exception):
    """Base class for all computation errors raised by hfk_invariants."""


class DimensionError(InvariantError, ValueError):
    """Operands have incompatible shapes, variable counts or genera."""


class DomainError(InvariantError, ValueError):
    """An operation was called outside of its mathematical domain."""


class DivisionByZeroError(InvariantError, ZeroDivisionError):
    """A fraction was built with a zero denominator."""


class PoleError(InvariantError, ZeroDivisionError):
    """A substitution sent a denominator to zero."""


class SingularMatrixError(InvariantError, ArithmeticError):
    """Elimination ran out of nonzero pivots.

    ``step`` is the elimination step (0-based) at which no pivot was found and
    ``pivot`` the (row, column) of the first still-unused row and column there.
    """

    def __init__(self, step: int, pivot: tuple[int, int]):
        self.step = step
        self.pivot = pivot
        super().__init__(f"matrix is singular: no nonzero pivot at step {step} (position {pivot})")


class AdmissibilityError(InvariantError, ValueError):
    """The relation count does not match the deficiency 2g condition."""


class GeneratorIndexError(InvariantError, IndexError):
    """A generator index lies outside the ranges allowed by the presentation."""


class NotHomologyCylinderError(InvariantError, ValueError):
    """The presentation does not describe a homology cylinder."""


class NonIntegralHomologyError(NotHomologyCylinderError):
    """Homology classes came out non-integral (a rational homology cylinder)."""


class PresentationParseError(InvariantError, ValueError):
    """A presentation file could not be decoded."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class TokenError(PresentationParseError):
    """A relation contains a token that is not ``m<k>``, ``z<k>`` or ``p<k>``."""

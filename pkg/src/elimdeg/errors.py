"""Exception hierarchy shared by every module of the package."""


class ElimDegError(Exception):
    """Base class for all package errors."""


class DegenerateInput(ElimDegError, ValueError):
    """Input polynomial is zero or constant in the variable that matters."""


class DegenerateSharedFactor(DegenerateInput):
    """Both polynomials share a factor in the eliminated variable, so the
    resultant vanishes identically."""


class MixedVariables(ElimDegError, ValueError):
    """More than two distinct variable names appear in a problem."""


class ZeroDivisor(ElimDegError, ZeroDivisionError):
    """Division by the zero polynomial."""


class InternalInvariantViolation(ElimDegError, AssertionError):
    """A mathematical invariant that must always hold was broken.

    This always indicates a bug, never bad input.
    """


class MethodMismatch(InternalInvariantViolation):
    """Two determinant backends returned different polynomials."""


class PolySyntaxError(ElimDegError, SyntaxError):
    """Malformed problem text.

    Carries the 0-based character offset ``pos``, 1-based ``line`` and
    ``col``, and a description of what the parser ``expected``.
    """

    def __init__(self, message, pos, line, col, expected=None):
        super().__init__(f"{message} at line {line}, column {col}")
        self.pos = pos
        self.line = line
        self.col = col
        self.expected = expected

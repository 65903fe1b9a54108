"""Exceptions raised by lcreg.

Every error the library raises on bad input derives from `LcregError`, so the
CLI can map the whole family to a usage failure (exit status 2).
"""


class LcregError(Exception):
    """Base class for all lcreg errors."""


class PolynomialSyntaxError(LcregError):
    """Raised when a polynomial string does not follow the grammar.

    Attributes:
        position (int): Zero-based offset of the offending character.
    """

    def __init__(self, message: str, position: int):  # noqa: D107
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(LcregError):
    """Raised when a polynomial names a variable outside x1..xm, y1..yn."""


class NotBihomogeneousError(LcregError):
    """Raised when an operation needs a bihomogeneous polynomial."""


class FieldError(LcregError):
    """Raised for invalid base fields or scalars mixed across fields."""


class PresentationError(LcregError):
    """Raised when a presentation matrix cannot be built."""


class ShapeError(LcregError):
    """Raised for resolution shapes that cannot occur."""


class ParameterError(LcregError):
    """Raised for parameters outside the documented ranges."""

"""Exceptions shared across the package."""


class PrecisionError(ArithmeticError):
    """A truncated computation ran out of known pi-adic digits."""


class EnumerationBound(ValueError):
    """A finite structure is too large for exhaustive enumeration."""

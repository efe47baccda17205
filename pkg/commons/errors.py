"""
Library exceptions. All derive from ValueError so callers may catch broadly.
"""

from typing import Optional, Sequence


class PolynomialError(ValueError):
    """Base class for invalid polynomial input"""


class PolySyntaxError(PolynomialError):
    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"[Error: parser] {message}{where}")


class ZeroPolynomialError(PolynomialError):
    pass


class ConstantPolynomialError(PolynomialError):
    pass


class NonSymmetricMatrixError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


class RootFindingError(ValueError):
    pass


class InterpolationError(ValueError):
    def __init__(self, message: str, residuals: Sequence[float] = ()):
        self.residuals = list(residuals)
        super().__init__(message)


class NotApplicableError(ValueError):
    """Operation requested on an input outside its precondition"""


class WitnessError(ValueError):
    pass

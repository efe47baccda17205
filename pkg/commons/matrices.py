"""
Exact matrix helpers over Fraction, backed by numpy object arrays
"""

from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError
from .utils import to_fraction

RationalMatrix = Sequence[Sequence[Fraction]]


def as_fraction_array(rows: RationalMatrix) -> np.ndarray:
    """
    Copy into a square numpy object array of Fractions

    Args:
        rows: row-major nested sequence

    Returns:
        (np.ndarray) dtype=object, shape (n, n)
    """
    n = len(rows)
    out = np.empty((n, n), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise DimensionMismatchError(
                "[Error: matrices.as_fraction_array] "
                f"row {i} has length {len(row)}, expected {n}"
            )
        for j, value in enumerate(row):
            out[i, j] = to_fraction(value)
    return out


def as_fraction_vector(values: Sequence) -> np.ndarray:
    out = np.empty(len(values), dtype=object)
    for i, value in enumerate(values):
        out[i] = to_fraction(value)
    return out


def identity(n: int) -> np.ndarray:
    out = np.full((n, n), Fraction(0), dtype=object)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def is_symmetric(m: np.ndarray) -> bool:
    return bool(np.array_equal(m, m.T))


def to_rows(m: np.ndarray) -> tuple:
    return tuple(tuple(Fraction(v) for v in row) for row in m)

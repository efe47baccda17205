"""
Hermite matrix H_f and its quadratic form Q_f
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

import numpy as np
from commons import (
    DimensionMismatchError,
    RationalMatrix,
    as_fraction_array,
    as_fraction_vector,
)
from polys import Poly, eval_poly_complex
from power_sums import PowerSums, newton_power_sums

RealVector = Sequence[Fraction]


@dataclass(frozen=True)
class HermiteMatrix:
    """
    n x n Hankel matrix with h_{i,j} = m_{i+j-2} (1-based), stored in full
    """

    n: int
    entries: Tuple[Tuple[Fraction, ...], ...]
    power_sums: PowerSums

    @classmethod
    def from_power_sums(cls, power_sums: PowerSums) -> "HermiteMatrix":
        n = power_sums.n
        if len(power_sums) < 2 * n - 1:
            raise DimensionMismatchError(
                "[Error: HermiteMatrix.from_power_sums] need m_0..m_{2n-2},"
                f" got {len(power_sums)} values for n={n}"
            )
        entries = tuple(
            tuple(power_sums[i + j] for j in range(n)) for i in range(n)
        )
        return cls(n=n, entries=entries, power_sums=power_sums)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def as_array(self) -> np.ndarray:
        return as_fraction_array(self.entries)

    @property
    def is_hankel(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[i + 1][j - 1]
            for i in range(self.n - 1)
            for j in range(1, self.n)
        )

    @property
    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.n)
            for j in range(i)
        )


def build_hermite_matrix(f: Poly) -> HermiteMatrix:
    """
    H_f from the power sums m_0..m_{2n-2} of the roots of f

    Args:
        f (Poly): degree n >= 1

    Returns:
        HermiteMatrix
    """
    return HermiteMatrix.from_power_sums(newton_power_sums(f))


def quadratic_form(
    h: Union[HermiteMatrix, RationalMatrix, np.ndarray], x: RealVector
) -> Fraction:
    """
    Exact x^T H x

    Args:
        h: symmetric matrix, HermiteMatrix or nested rows
        x: vector of rationals (floats are converted exactly)

    Returns:
        (Fraction)
    """
    if isinstance(h, HermiteMatrix):
        matrix = h.as_array()
    elif isinstance(h, np.ndarray):
        matrix = h
    else:
        matrix = as_fraction_array(h)
    vector = as_fraction_vector(x)
    if matrix.shape[0] != len(vector):
        raise DimensionMismatchError(
            "[Error: hermite.quadratic_form] matrix is"
            f" {matrix.shape[0]}x{matrix.shape[0]}, vector has length"
            f" {len(vector)}"
        )
    if len(vector) == 0:
        return Fraction(0)
    return Fraction(vector.dot(matrix.dot(vector)))


def sos_identity_check(
    f: Poly, x: RealVector, roots: Sequence[Tuple[complex, int]]
) -> complex:
    """
    sum_l mu_l * p(lambda_l)^2 with p(t) = sum_j x_j t^(j-1), to be compared
    with quadratic_form(build_hermite_matrix(f), x)

    Args:
        f (Poly): degree n
        x: length n vector
        roots: full root multiset of f as (value, multiplicity)

    Returns:
        (complex) imaginary part vanishes up to rounding
    """
    if len(x) != f.degree:
        raise DimensionMismatchError(
            "[Error: hermite.sos_identity_check] vector length"
            f" {len(x)} != degree {f.degree}"
        )
    p = Poly(tuple(Fraction(v) for v in x))
    return complex(
        sum(mu * eval_poly_complex(p, complex(value)) ** 2 for value, mu in roots)
    )

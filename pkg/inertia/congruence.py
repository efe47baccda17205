"""
Exact congruence diagonalization of symmetric rational matrices

Contains:
    - Inertia: (n_plus, n_minus, n_zero)
    - CongruenceResult: S, D with S^T H S = diag(D)
    - congruence_diagonalize, inertia_of, is_psd, negative_witness
    - verify_congruence, matrix_rank: independent exact checks
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

import numpy as np
from commons import (
    DimensionMismatchError,
    NonSymmetricMatrixError,
    RationalMatrix,
    as_fraction_array,
    get_logger,
    identity,
    is_symmetric,
    to_rows,
)
from hermite import HermiteMatrix
from pydantic import BaseModel, ConfigDict, NonNegativeInt, model_validator

logger = get_logger(__name__)

MatrixLike = Union[HermiteMatrix, RationalMatrix, np.ndarray]


class Inertia(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_plus: NonNegativeInt
    n_minus: NonNegativeInt
    n_zero: NonNegativeInt

    @property
    def n(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.n_plus, self.n_minus, self.n_zero)

    @classmethod
    def from_diagonal(cls, diagonal) -> "Inertia":
        return cls(
            n_plus=sum(1 for d in diagonal if d > 0),
            n_minus=sum(1 for d in diagonal if d < 0),
            n_zero=sum(1 for d in diagonal if d == 0),
        )


@dataclass(frozen=True)
class CongruenceResult:
    transform: Tuple[Tuple[Fraction, ...], ...]
    diagonal: Tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.diagonal)

    @property
    def inertia(self) -> Inertia:
        return Inertia.from_diagonal(self.diagonal)

    def column(self, k: int) -> List[Fraction]:
        return [row[k] for row in self.transform]


def _as_matrix(h: MatrixLike) -> np.ndarray:
    if isinstance(h, HermiteMatrix):
        return h.as_array()
    if isinstance(h, np.ndarray):
        return as_fraction_array(h.tolist())
    return as_fraction_array(h)


def _add_congruence(a: np.ndarray, s: np.ndarray, target: int, source: int, c):
    """
    x_target += c * x_source on the coordinates: column/row op on a, column
    op on s
    """
    a[:, target] += c * a[:, source]
    a[target, :] += c * a[source, :]
    s[:, target] += c * s[:, source]


def _swap(a: np.ndarray, s: np.ndarray, i: int, k: int):
    a[[i, k], :] = a[[k, i], :]
    a[:, [i, k]] = a[:, [k, i]]
    s[:, [i, k]] = s[:, [k, i]]


def congruence_diagonalize(h: MatrixLike) -> CongruenceResult:
    """
    Symmetric Gaussian elimination. At step k:
        - first nonzero diagonal entry in the trailing block is swapped to k
          and its row/column eliminated
        - if the trailing diagonal is zero but some h_{i,j} != 0, coordinate
          j is added to coordinate i (new diagonal entry 2 h_{i,j}) and the
          step is retried
        - a zero trailing block ends the loop

    Args:
        h: symmetric rational matrix

    Returns:
        CongruenceResult with S^T H S = diag(D)
    """
    a = _as_matrix(h)
    if not is_symmetric(a):
        raise NonSymmetricMatrixError(
            "[Error: inertia.congruence_diagonalize] matrix is not symmetric"
        )
    n = a.shape[0]
    s = identity(n)
    k = 0
    while k < n:
        pivot = next((i for i in range(k, n) if a[i, i] != 0), None)
        if pivot is None:
            off = next(
                (
                    (i, j)
                    for i in range(k, n)
                    for j in range(i + 1, n)
                    if a[i, j] != 0
                ),
                None,
            )
            if off is None:
                logger.debug("zero trailing block from step %d", k)
                break
            i, j = off
            logger.debug("zero diagonal at step %d, adding %d into %d", k, j, i)
            _add_congruence(a, s, target=i, source=j, c=Fraction(1))
            continue
        if pivot != k:
            _swap(a, s, pivot, k)
        for j in range(k + 1, n):
            if a[j, k] != 0:
                _add_congruence(a, s, target=j, source=k, c=-a[j, k] / a[k, k])
        k += 1
    diagonal = tuple(Fraction(a[i, i]) for i in range(n))
    return CongruenceResult(transform=to_rows(s), diagonal=diagonal)


def verify_congruence(h: MatrixLike, result: CongruenceResult) -> bool:
    """Exact S^T H S == diag(D)"""
    a = _as_matrix(h)
    s = as_fraction_array(result.transform)
    if a.shape != s.shape or len(result.diagonal) != a.shape[0]:
        return False
    product = s.T.dot(a).dot(s)
    n = a.shape[0]
    return all(
        product[i, j] == (result.diagonal[i] if i == j else 0)
        for i in range(n)
        for j in range(n)
    )


def inertia_of(h: MatrixLike) -> Inertia:
    return congruence_diagonalize(h).inertia


def is_psd(h: MatrixLike) -> bool:
    return inertia_of(h).n_minus == 0


def negative_witness(
    h: MatrixLike, result: Optional[CongruenceResult] = None
) -> Optional[List[Fraction]]:
    """
    x = S e_k for the first k with d_k < 0, so that x^T H x = d_k < 0

    Args:
        h: symmetric rational matrix
        result: precomputed diagonalization of h, optional

    Returns:
        witness vector, or None iff h is positive semidefinite
    """
    result = result or congruence_diagonalize(h)
    for k, d in enumerate(result.diagonal):
        if d < 0:
            return result.column(k)
    return None


def matrix_rank(m: MatrixLike) -> int:
    """
    Exact rank by fraction row echelon, no pivot search beyond nonzero
    """
    rows = [list(row) for row in _as_matrix(m).tolist()]
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    for col in range(n_cols):
        pivot = next(
            (r for r in range(rank, n_rows) if rows[r][col] != 0), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, n_rows):
            factor = rows[r][col] / rows[rank][col]
            if factor == 0:
                continue
            for c in range(col, n_cols):
                rows[r][c] -= factor * rows[rank][c]
        rank += 1
        if rank == n_rows:
            break
    return rank

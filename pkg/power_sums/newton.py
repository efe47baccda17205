"""
Power sums m_k of the roots of f, from its coefficients

Contains:
    - PowerSums: exact m_0..m_upto
    - newton_power_sums: Newton's identities on the monic form of f
    - companion_power_sums: trace(C^k) of the rational companion matrix,
      an independent exact path
    - direct_power_sums: literal sum over a known root multiset (oracle)
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from commons import ConstantPolynomialError, get_logger
from polys import Poly, make_monic

logger = get_logger(__name__)


@dataclass(frozen=True)
class PowerSums:
    n: int
    values: Tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def _default_upto(f: Poly, upto: Optional[int], owner: str) -> int:
    if f.degree < 1:
        raise ConstantPolynomialError(
            f"[Error: {owner}] nonconstant polynomial required, got degree"
            f" {f.degree}"
        )
    if upto is None:
        return 2 * f.degree - 2
    if upto < 0:
        raise ValueError(f"[Error: {owner}] upto must be >= 0, got {upto}")
    return upto


def newton_power_sums(f: Poly, upto: Optional[int] = None) -> PowerSums:
    """
    Newton's identities on x^n + a_{n-1} x^{n-1} + ... + a_0

        m_0 = n
        m_k = -(k a_{n-k} + sum_{i=1}^{k-1} a_{n-i} m_{k-i})   1 <= k <= n
        m_k = -sum_{i=1}^{n} a_{n-i} m_{k-i}                   k > n

    Args:
        f (Poly): degree n >= 1, any nonzero leading coefficient
        upto (int): last index computed, default 2n - 2

    Returns:
        PowerSums with upto + 1 exact values
    """
    upto = _default_upto(f, upto, "power_sums.newton_power_sums")
    monic = make_monic(f)
    n = monic.degree
    a = monic.coeffs
    m: List[Fraction] = [Fraction(n)]
    for k in range(1, upto + 1):
        if k <= n:
            acc = k * a[n - k]
            for i in range(1, k):
                acc += a[n - i] * m[k - i]
        else:
            acc = Fraction(0)
            for i in range(1, n + 1):
                acc += a[n - i] * m[k - i]
        m.append(-acc)
    logger.debug("power sums of degree %d polynomial: %s", n, m)
    return PowerSums(n=n, values=tuple(m))


def companion_matrix(f: Poly) -> np.ndarray:
    """
    Exact companion matrix of monic(f): subdiagonal ones, last column -a_j
    """
    monic = make_monic(f)
    n = monic.degree
    c = np.full((n, n), Fraction(0), dtype=object)
    for i in range(1, n):
        c[i, i - 1] = Fraction(1)
    for i in range(n):
        c[i, n - 1] = -monic.coeffs[i]
    return c


def companion_power_sums(f: Poly, upto: Optional[int] = None) -> PowerSums:
    """
    m_k = trace(C^k), C the companion matrix: eigenvalues of C are the roots
    of f with multiplicity. Slower than Newton, shares no code with it.
    """
    upto = _default_upto(f, upto, "power_sums.companion_power_sums")
    c = companion_matrix(f)
    n = c.shape[0]
    power = np.full((n, n), Fraction(0), dtype=object)
    for i in range(n):
        power[i, i] = Fraction(1)
    values = [Fraction(n)]
    for _ in range(upto):
        power = power.dot(c)
        values.append(sum((Fraction(v) for v in np.diag(power)), Fraction(0)))
    return PowerSums(n=n, values=tuple(values))


def direct_power_sums(
    roots: Sequence[Tuple[complex, int]], upto: int
) -> List[complex]:
    """
    m_k = sum_j mu_j * lambda_j^k in complex floating point

    Args:
        roots: (value, multiplicity) pairs, multiplicity >= 1
        upto (int): last index computed

    Returns:
        [m_0, ..., m_upto]
    """
    if any(mu < 1 for _, mu in roots):
        raise ValueError(
            "[Error: power_sums.direct_power_sums] multiplicities must be >= 1"
        )
    return [
        complex(sum(mu * complex(value) ** k for value, mu in roots))
        for k in range(upto + 1)
    ]



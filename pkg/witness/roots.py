"""
Numeric roots with exact multiplicities

Roots are located on each squarefree factor of the gcd chain (Yun), so the
multiplicity of every root is exact and the root finder only ever sees
simple roots.
"""

from dataclasses import dataclass
from typing import List, Tuple

import config
import numpy as np
from commons import RootFindingError, get_logger
from polys import (
    Poly,
    derivative,
    eval_poly_complex,
    squarefree_decomposition,
    squarefree_part,
)
from sturm import sturm_chain

logger = get_logger(__name__)


@dataclass(frozen=True)
class RootSet:
    """
    Distinct roots (value, multiplicity), closed under conjugation
    """

    distinct: Tuple[Tuple[complex, int], ...]

    @property
    def r(self) -> int:
        return len(self.distinct)

    @property
    def n(self) -> int:
        return sum(mu for _, mu in self.distinct)

    @property
    def values(self) -> List[complex]:
        return [value for value, _ in self.distinct]

    @property
    def non_real(self) -> List[Tuple[complex, int]]:
        return [(value, mu) for value, mu in self.distinct if value.imag != 0]

    def is_conjugate_closed(self, tol: float = config.CONJUGATE_TOL) -> bool:
        for value, mu in self.non_real:
            if not any(
                abs(other - value.conjugate()) <= tol and other_mu == mu
                for other, other_mu in self.distinct
            ):
                return False
        return True


def _polish(p: Poly, z: complex) -> complex:
    """Newton refinement on a simple root"""
    dp = derivative(p)
    for _ in range(config.NEWTON_POLISH_STEPS):
        slope = eval_poly_complex(dp, z)
        if slope == 0:
            break
        step = eval_poly_complex(p, z) / slope
        z -= step
        if abs(step) <= 1e-15 * (1 + abs(z)):
            break
    return z


def _numeric_roots(a: Poly) -> List[complex]:
    """
    Roots of a squarefree rational polynomial: companion eigenvalues,
    Newton-polished, then snapped to an exactly conjugate-closed list using
    the exact Sturm count of real roots
    """
    if a.degree == 1:
        return [complex(float(-a[0] / a[1]), 0.0)]
    raw = np.roots([float(c) for c in reversed(a.coeffs)])
    if not np.all(np.isfinite(raw)):
        raise RootFindingError(
            "[Error: witness.approx_roots] companion eigenvalues did not"
            f" converge for degree {a.degree} factor"
        )
    polished = sorted(
        (_polish(a, complex(z)) for z in raw), key=lambda z: abs(z.imag)
    )
    n_real = sturm_chain(a).count_real_roots()
    reals = [complex(z.real, 0.0) for z in polished[:n_real]]
    rest = polished[n_real:]
    uppers = [z for z in rest if z.imag > 0]
    lowers = [z for z in rest if z.imag < 0]
    if len(uppers) != len(lowers) or len(uppers) + len(lowers) != len(rest):
        raise RootFindingError(
            "[Error: witness.approx_roots] non-real roots do not pair up"
            f" ({len(uppers)} upper, {len(lowers)} lower)"
        )
    pairs = []
    for z in uppers:
        w = min(lowers, key=lambda c: abs(c - z.conjugate()))
        lowers.remove(w)
        gap = abs(w - z.conjugate())
        if gap > config.CONJUGATE_TOL * (1 + abs(z)):
            raise RootFindingError(
                "[Error: witness.approx_roots] conjugate pairing gap"
                f" {gap:.3e} at {z}"
            )
        u = (z + w.conjugate()) / 2
        pairs.extend([u, u.conjugate()])
    return reals + pairs


def approx_roots(f: Poly) -> RootSet:
    """
    Distinct roots of f with exact multiplicities

    Args:
        f (Poly): degree >= 1

    Returns:
        RootSet
    """
    distinct: List[Tuple[complex, int]] = []
    for factor, multiplicity in squarefree_decomposition(f):
        distinct.extend((z, multiplicity) for z in _numeric_roots(factor))
    g = squarefree_part(f)
    for z, _ in distinct:
        residual = abs(eval_poly_complex(g, z))
        bound = config.ROOT_RESIDUAL_TOL * (1 + abs(z)) ** g.degree
        if residual > bound:
            raise RootFindingError(
                f"[Error: witness.approx_roots] residual {residual:.3e} at"
                f" {z} exceeds {bound:.3e}"
            )
    logger.debug("roots of %s: %s", f, distinct)
    return RootSet(distinct=tuple(distinct))

"""
Constructive negativity witness

Contains:
    - ComplexPoly
    - conjugate_symmetry_defect: max |p(conj l) - conj p(l)| over the roots
    - lemma2_witness: real polynomial p with p(l1) = i, p(conj l1) = -i and
      p = 0 on the other distinct roots; its padded coefficients x give
      Q_f(x) = -2 mu_1
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import config
import numpy as np
from commons import (
    InterpolationError,
    NotApplicableError,
    WitnessError,
    get_logger,
)
from hermite import build_hermite_matrix, quadratic_form
from polys import Poly

from .roots import RootSet, approx_roots

logger = get_logger(__name__)


@dataclass(frozen=True)
class ComplexPoly:
    coeffs: Tuple[complex, ...]

    def __call__(self, t: complex) -> complex:
        value = 0j
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    @property
    def degree(self) -> int:
        nonzero = [j for j, c in enumerate(self.coeffs) if c != 0]
        return nonzero[-1] if nonzero else -1

    def conjugate(self) -> "ComplexPoly":
        """q(t) = sum conj(c_j) t^j"""
        return ComplexPoly(tuple(c.conjugate() for c in self.coeffs))

    @property
    def max_imag(self) -> float:
        return max((abs(c.imag) for c in self.coeffs), default=0.0)

    @property
    def max_abs(self) -> float:
        return max((abs(c) for c in self.coeffs), default=0.0)

    def real_part(self) -> "ComplexPoly":
        return ComplexPoly(tuple(complex(c.real, 0.0) for c in self.coeffs))


@dataclass(frozen=True)
class Lemma2Witness:
    lambda1: complex
    mu1: int
    interpolant: ComplexPoly  # before the imaginary parts are dropped
    x: Tuple[float, ...]
    expected: int
    achieved: float
    exact_value: Fraction
    lemma1_defect: float
    imag_defect: float

    @property
    def within_lemma1_bound(self) -> bool:
        return self.imag_defect <= config.CONJUGATE_TOL * (
            1 + self.interpolant.max_abs
        )


def conjugate_symmetry_defect(p: ComplexPoly, roots: RootSet) -> float:
    """
    max |p(conj l) - q(conj l)| with q the conjugate-coefficient polynomial,
    q(conj l) = conj p(l)
    """
    q = p.conjugate()
    return max(
        (abs(p(value.conjugate()) - q(value.conjugate())) for value in roots.values),
        default=0.0,
    )


def select_lambda1(roots: RootSet) -> Tuple[complex, int]:
    """
    Non-real root with Im > 0, smallest |Im| then smallest |Re|
    """
    candidates = [(v, mu) for v, mu in roots.non_real if v.imag > 0]
    if not candidates:
        raise NotApplicableError(
            "[Error: witness.lemma2_witness] polynomial is real-rooted,"
            " no non-real root to interpolate at"
        )
    return min(candidates, key=lambda c: (abs(c[0].imag), abs(c[0].real)))


def interpolate(nodes: List[complex], values: List[complex]) -> ComplexPoly:
    """
    Degree <= r - 1 interpolant through r nodes via the Vandermonde system
    """
    r = len(nodes)
    vandermonde = np.array(
        [[node**j for j in range(r)] for node in nodes], dtype=complex
    )
    rhs = np.array(values, dtype=complex)
    try:
        coeffs = np.linalg.solve(vandermonde, rhs)
    except np.linalg.LinAlgError as e:
        raise InterpolationError(
            f"[Error: witness.interpolate] singular Vandermonde system: {e}"
        ) from e
    residuals = np.abs(vandermonde.dot(coeffs) - rhs)
    bound = config.INTERPOLATION_RESIDUAL_TOL * (1 + float(np.max(np.abs(coeffs))))
    if float(np.max(residuals)) > bound:
        raise InterpolationError(
            "[Error: witness.interpolate] ill-conditioned interpolation,"
            f" max residual {float(np.max(residuals)):.3e}",
            residuals=[float(v) for v in residuals],
        )
    return ComplexPoly(tuple(complex(c) for c in coeffs))


def lemma2_witness(f: Poly) -> Lemma2Witness:
    """
    Witness of non-PSD Hermite form for a polynomial with a non-real root

    Args:
        f (Poly): degree >= 2, not real-rooted

    Returns:
        Lemma2Witness, with achieved ~ -2 mu_1 and exact Q_f(x) < 0
    """
    roots = approx_roots(f)
    lambda1, mu1 = select_lambda1(roots)
    lambda2 = lambda1.conjugate()
    others = [
        v for v in roots.values if v != lambda1 and v != lambda2
    ]
    nodes = [lambda1, lambda2, *others]
    values = [1j, -1j] + [0j] * len(others)
    raw = interpolate(nodes, values)

    lemma1_defect = conjugate_symmetry_defect(raw, roots)
    imag_defect = raw.max_imag
    p = raw.real_part()
    n = f.degree
    x = tuple(c.real for c in p.coeffs) + (0.0,) * (n - len(p.coeffs))

    achieved = sum(mu * (p(value) ** 2).real for value, mu in roots.distinct)
    expected = -2 * mu1
    if abs(achieved - expected) > config.LEMMA2_TOL * (1 + 2 * mu1):
        raise WitnessError(
            f"[Error: witness.lemma2_witness] achieved {achieved:.6g},"
            f" expected {expected}"
        )
    exact_value = quadratic_form(
        build_hermite_matrix(f), [Fraction(v) for v in x]
    )
    if exact_value >= 0:
        raise WitnessError(
            "[Error: witness.lemma2_witness] rationalized witness is not"
            f" negative: Q = {exact_value}"
        )
    logger.debug(
        "lemma2 witness at %s (mu=%d): achieved %.12g, imag defect %.3e",
        lambda1,
        mu1,
        achieved,
        imag_defect,
    )
    return Lemma2Witness(
        lambda1=lambda1,
        mu1=mu1,
        interpolant=raw,
        x=x,
        expected=expected,
        achieved=achieved,
        exact_value=exact_value,
        lemma1_defect=lemma1_defect,
        imag_defect=imag_defect,
    )

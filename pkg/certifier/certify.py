"""
Decision procedure: f is real-rooted iff its Hermite form is PSD
"""

import math
from enum import Enum
from fractions import Fraction

from commons import ConstantPolynomialError, as_fraction_array, get_logger
from hermite import HermiteMatrix, build_hermite_matrix, quadratic_form
from inertia import (
    Inertia,
    congruence_diagonalize,
    matrix_rank,
    negative_witness,
)
from polys import Poly, format_poly, make_monic
from power_sums import companion_power_sums
from pydantic import BaseModel
from witness import lemma2_witness

from .certificate import Certificate, Counts, Lemma2Document, Verdict

logger = get_logger(__name__)


def certify(f: Poly, want_lemma2: bool = False) -> Certificate:
    """
    make_monic -> power sums -> H_f -> congruence diagonalization -> verdict

    Args:
        f (Poly): nonconstant
        want_lemma2 (bool): attach the interpolation witness when f is not
            real-rooted (needs numeric root finding)

    Returns:
        Certificate
    """
    if f.degree < 1:
        raise ConstantPolynomialError(
            "[Error: certifier.certify] nonconstant polynomial required,"
            f" got degree {f.degree}"
        )
    monic = make_monic(f)
    hermite = build_hermite_matrix(monic)
    congruence = congruence_diagonalize(hermite)
    inertia = congruence.inertia
    real_rooted = inertia.n_minus == 0
    logger.info(
        "%s: inertia %s, %s",
        format_poly(f),
        inertia.as_tuple(),
        "real-rooted" if real_rooted else "not real-rooted",
    )

    witness = witness_value = lemma2 = None
    if not real_rooted:
        witness = negative_witness(hermite, congruence)
        witness_value = quadratic_form(hermite, witness)
        if want_lemma2:
            lemma2 = Lemma2Document.from_witness(lemma2_witness(monic))

    return Certificate(
        verdict=Verdict.REAL_ROOTED if real_rooted else Verdict.NOT_REAL_ROOTED,
        degree=f.degree,
        polynomial=format_poly(f),
        power_sums=list(hermite.power_sums),
        hermite=[list(row) for row in hermite.entries],
        inertia=inertia,
        diagonal=list(congruence.diagonal),
        transform=[list(row) for row in congruence.transform],
        witness=witness,
        witness_value=witness_value,
        counts=Counts(
            distinct_roots=inertia.rank,
            distinct_real_roots=inertia.signature,
        ),
        lemma2=lemma2,
    )


# -- Verification --


class VerificationReason(str, Enum):
    OK = "ok"
    DEGREE_MISMATCH = "degree mismatch"
    HERMITE_MISMATCH = "hermite mismatch"
    CONGRUENCE_MISMATCH = "congruence mismatch"
    SINGULAR_TRANSFORM = "singular transform"
    INERTIA_MISMATCH = "inertia mismatch"
    COUNTS_MISMATCH = "counts mismatch"
    VERDICT_INCONSISTENT = "verdict inconsistent"
    WITNESS_MISSING = "witness missing"
    WITNESS_DIMENSION = "witness dimension mismatch"
    WITNESS_NOT_NEGATIVE = "witness not negative"
    WITNESS_VALUE_MISMATCH = "witness value mismatch"
    LEMMA2_MISMATCH = "lemma2 mismatch"


class Verification(BaseModel):
    ok: bool
    reason: VerificationReason
    detail: str = ""

    def __bool__(self):
        return self.ok


def _fail(reason: VerificationReason, detail: str = "") -> Verification:
    logger.warning("certificate rejected: %s %s", reason.value, detail)
    return Verification(ok=False, reason=reason, detail=detail)


def verify_certificate(cert: Certificate, f: Poly) -> Verification:
    """
    Check a certificate against f from scratch. H_f is rebuilt from
    companion-matrix traces rather than Newton's identities.

    Args:
        cert (Certificate): as produced by certify or parsed from JSON
        f (Poly): the polynomial it claims to certify

    Returns:
        Verification, truthy iff every check passes
    """
    n = f.degree
    if n < 1 or cert.degree != n:
        return _fail(
            VerificationReason.DEGREE_MISMATCH,
            f"certificate degree {cert.degree}, polynomial degree {n}",
        )

    expected = HermiteMatrix.from_power_sums(companion_power_sums(f))
    if [list(row) for row in expected.entries] != cert.hermite or list(
        expected.power_sums
    ) != list(cert.power_sums):
        return _fail(VerificationReason.HERMITE_MISMATCH)
    h = expected.as_array()

    if (
        len(cert.diagonal) != n
        or len(cert.transform) != n
        or any(len(row) != n for row in cert.transform)
    ):
        return _fail(VerificationReason.CONGRUENCE_MISMATCH, "shape")
    s = as_fraction_array(cert.transform)
    product = s.T.dot(h).dot(s)
    for i in range(n):
        for j in range(n):
            target = cert.diagonal[i] if i == j else Fraction(0)
            if product[i, j] != target:
                return _fail(
                    VerificationReason.CONGRUENCE_MISMATCH, f"entry ({i}, {j})"
                )
    if matrix_rank(cert.transform) != n:
        return _fail(VerificationReason.SINGULAR_TRANSFORM)

    inertia = Inertia.from_diagonal(cert.diagonal)
    if inertia != cert.inertia:
        return _fail(VerificationReason.INERTIA_MISMATCH)
    if (
        cert.counts.distinct_roots != inertia.rank
        or cert.counts.distinct_real_roots != inertia.signature
    ):
        return _fail(VerificationReason.COUNTS_MISMATCH)

    if cert.is_real_rooted:
        if inertia.n_minus != 0:
            return _fail(VerificationReason.VERDICT_INCONSISTENT)
        return Verification(ok=True, reason=VerificationReason.OK)

    if inertia.n_minus == 0:
        return _fail(VerificationReason.VERDICT_INCONSISTENT)
    if cert.witness is None:
        return _fail(VerificationReason.WITNESS_MISSING)
    if len(cert.witness) != n:
        return _fail(VerificationReason.WITNESS_DIMENSION)
    value = quadratic_form(h, cert.witness)
    if value >= 0:
        return _fail(VerificationReason.WITNESS_NOT_NEGATIVE, f"Q = {value}")
    if cert.witness_value != value:
        return _fail(
            VerificationReason.WITNESS_VALUE_MISMATCH,
            f"claimed {cert.witness_value}, got {value}",
        )
    if cert.lemma2 is not None:
        if len(cert.lemma2.x) != n:
            return _fail(VerificationReason.LEMMA2_MISMATCH, "dimension")
        if not all(math.isfinite(v) for v in cert.lemma2.x):
            return _fail(VerificationReason.LEMMA2_MISMATCH, "non-finite entry")
        lemma2_value = quadratic_form(h, [Fraction(v) for v in cert.lemma2.x])
        if lemma2_value != cert.lemma2.exact_value:
            return _fail(VerificationReason.LEMMA2_MISMATCH)
        if lemma2_value >= 0:
            return _fail(VerificationReason.LEMMA2_MISMATCH, "not negative")
    return Verification(ok=True, reason=VerificationReason.OK)

"""
Generated-corpus equivalence run: Hermite verdict vs Sturm oracle
"""

from certifier import certify, verify_certificate
from commons import get_logger
from corpus import GeneratedCase, generate_corpus
from polys import format_poly, squarefree_part
from sturm import oracle_is_real_rooted, sturm_count_all
from witness import lemma2_witness

from .documents import CaseFailure, SelftestReport

logger = get_logger(__name__)


def check_case(case: GeneratedCase, with_lemma2: bool = False) -> str | None:
    """
    Returns:
        None when every check passes, else a short problem description
    """
    f = case.poly
    cert = certify(f)
    oracle = oracle_is_real_rooted(f)
    if cert.is_real_rooted != oracle:
        return f"verdict {cert.verdict.value}, oracle real-rooted={oracle}"
    if cert.is_real_rooted != case.real_rooted:
        return f"verdict {cert.verdict.value} disagrees with the construction"
    verification = verify_certificate(cert, f)
    if not verification:
        return f"certificate rejected: {verification.reason.value}"
    if cert.counts.distinct_roots != squarefree_part(f).degree:
        return "rank differs from the number of distinct roots"
    if cert.counts.distinct_real_roots != sturm_count_all(f):
        return "signature differs from the Sturm count"
    if with_lemma2 and not cert.is_real_rooted:
        witness = lemma2_witness(f)
        if witness.exact_value >= 0:
            return "lemma2 witness is not negative"
        if not witness.within_lemma1_bound:
            return (
                "interpolant imaginary parts exceed the conjugate-symmetry"
                f" bound: {witness.imag_defect:.3e}"
            )
    return None


def run_selftest(
    degree_max: int, cases: int, seed: int, with_lemma2: bool = False
) -> SelftestReport:
    report = SelftestReport(cases=cases, degree_max=degree_max, seed=seed)
    for index, case in enumerate(generate_corpus(cases, degree_max, seed)):
        try:
            problem = check_case(case, with_lemma2=with_lemma2)
        except ValueError as e:
            problem = f"{type(e).__name__}: {e}"
        if problem is not None:
            logger.warning("case %d %s: %s", index, format_poly(case.poly), problem)
            report.failures.append(
                CaseFailure(polynomial=format_poly(case.poly), problem=problem)
            )
        elif index and index % 100 == 0:
            logger.info("selftest: %d/%d cases", index, cases)
    return report

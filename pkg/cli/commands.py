"""
Command-line front end

    check     verdict and certificate
    matrix    power sums and H_f
    witness   exact congruence witness and interpolation witness
    counts    rank / signature counts next to the Sturm count
    selftest  generated-corpus equivalence run
"""

import argparse
import sys
from typing import Callable, Dict, List, Optional

import config
import constants
from certifier import Certificate, Lemma2Document, certify, verify_certificate
from commons import (
    InterpolationError,
    NotApplicableError,
    PolynomialError,
    RootFindingError,
    WitnessError,
    configure_logging,
    format_rational,
    get_logger,
)
from hermite import build_hermite_matrix
from polys import Poly, format_poly, parse_poly, squarefree_part
from pydantic import BaseModel
from sturm import oracle_is_real_rooted, sturm_count_all
from witness import lemma2_witness

from .documents import (
    CheckDocument,
    CountsDocument,
    MatrixDocument,
    OracleReport,
    WitnessDocument,
)
from .selftest import run_selftest

logger = get_logger(__name__)


# -- Rendering --


def _vector(values) -> str:
    return "[" + ", ".join(format_rational(v) for v in values) + "]"


def _matrix(rows) -> str:
    return "\n".join("  " + _vector(row) for row in rows)


def _emit(document: BaseModel, text: str, as_json: bool):
    if as_json:
        print(document.model_dump_json(indent=2))
    else:
        print(text)


def _lemma2_text(lemma2: Lemma2Document) -> List[str]:
    re_, im = lemma2.lambda1
    return [
        f"lemma2 root: {re_:.12g} {'+' if im >= 0 else '-'} {abs(im):.12g}i"
        f" (multiplicity {lemma2.mu1})",
        "lemma2 x: [" + ", ".join(f"{v:.12g}" for v in lemma2.x) + "]",
        f"lemma2 value: {lemma2.achieved:.12g} (expected {lemma2.expected}),"
        f" exact {format_rational(lemma2.exact_value)}",
        f"conjugate symmetry defect: {lemma2.lemma1_defect:.3e}",
        f"imaginary-part defect: {lemma2.imag_defect:.3e}",
    ]


def _certificate_text(cert: Certificate) -> str:
    lines = [
        f"verdict: {cert.verdict.value}",
        f"polynomial: {cert.polynomial}",
        "inertia (n+, n-, n0): " + str(cert.inertia.as_tuple()),
        f"diagonal: {_vector(cert.diagonal)}",
    ]
    if cert.witness is not None:
        lines.append(
            f"witness: {_vector(cert.witness)}"
            f"  Q = {format_rational(cert.witness_value)}"
        )
    lines.append(
        f"counts ({cert.counts.note}): distinct roots"
        f" {cert.counts.distinct_roots}, distinct real roots"
        f" {cert.counts.distinct_real_roots}"
    )
    if cert.lemma2 is not None:
        lines.extend(_lemma2_text(cert.lemma2))
    return "\n".join(lines)


# -- Input --


def read_polynomial(args: argparse.Namespace) -> Poly:
    text = sys.stdin.read() if args.poly == constants.STDIN_MARKER else args.poly
    return parse_poly(text.strip(), coeffs=True if args.coeffs else None)


# -- Commands --


def cmd_check(args: argparse.Namespace) -> int:
    f = read_polynomial(args)
    cert = certify(f, want_lemma2=args.lemma2)
    verification = verify_certificate(cert, f)
    oracle = None
    if args.oracle:
        oracle_real = oracle_is_real_rooted(f)
        sturm_real = sturm_count_all(f)
        oracle = OracleReport(
            real_rooted=oracle_real,
            distinct_real_roots=sturm_real,
            distinct_roots=squarefree_part(f).degree,
            agrees=oracle_real == cert.is_real_rooted
            and sturm_real == cert.counts.distinct_real_roots,
        )
    document = CheckDocument(
        certificate=cert,
        verified=verification.ok,
        verification_reason=verification.reason.value,
        oracle=oracle,
    )
    text = _certificate_text(cert)
    if oracle is not None:
        text += (
            f"\noracle (Sturm): real-rooted={oracle.real_rooted},"
            f" distinct real roots {oracle.distinct_real_roots},"
            f" {'agrees' if oracle.agrees else 'DISAGREES'}"
        )
    _emit(document, text, args.json)
    if not verification or (oracle is not None and not oracle.agrees):
        logger.error(
            "internal disagreement on %s: verification=%s oracle=%s",
            cert.polynomial,
            verification.reason.value,
            oracle,
        )
        return constants.EXIT_DISAGREEMENT
    if cert.is_real_rooted:
        return constants.EXIT_REAL_ROOTED
    return constants.EXIT_NOT_REAL_ROOTED


def cmd_matrix(args: argparse.Namespace) -> int:
    f = read_polynomial(args)
    hermite = build_hermite_matrix(f)
    document = MatrixDocument(
        polynomial=format_poly(f),
        degree=f.degree,
        power_sums=list(hermite.power_sums),
        hermite=[list(row) for row in hermite.entries],
    )
    text = (
        f"polynomial: {document.polynomial}\n"
        f"power sums m_0..m_{2 * f.degree - 2}: {_vector(document.power_sums)}\n"
        f"H_f:\n{_matrix(document.hermite)}"
    )
    _emit(document, text, args.json)
    return constants.EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    f = read_polynomial(args)
    cert = certify(f)
    document = WitnessDocument(
        polynomial=cert.polynomial, real_rooted=cert.is_real_rooted
    )
    if cert.is_real_rooted:
        _emit(document, "polynomial is real-rooted: H_f is PSD, no witness", args.json)
        return constants.EXIT_REAL_ROOTED
    try:
        lemma2 = Lemma2Document.from_witness(lemma2_witness(f))
    except (NotApplicableError, RootFindingError, InterpolationError) as e:
        logger.warning("no interpolation witness: %s", e)
        lemma2 = None
    document = document.model_copy(
        update={
            "witness": cert.witness,
            "witness_value": cert.witness_value,
            "lemma2": lemma2,
        }
    )
    lines = [
        f"polynomial: {cert.polynomial}",
        f"witness: {_vector(cert.witness or [])}"
        f"  Q = {format_rational(cert.witness_value)}",
    ]
    if lemma2 is not None:
        lines.extend(_lemma2_text(lemma2))
    _emit(document, "\n".join(lines), args.json)
    return constants.EXIT_NOT_REAL_ROOTED


def cmd_counts(args: argparse.Namespace) -> int:
    f = read_polynomial(args)
    cert = certify(f)
    sturm_real = sturm_count_all(f)
    squarefree_degree = squarefree_part(f).degree
    document = CountsDocument(
        polynomial=cert.polynomial,
        distinct_roots=cert.counts.distinct_roots,
        distinct_real_roots=cert.counts.distinct_real_roots,
        sturm_distinct_real_roots=sturm_real,
        squarefree_degree=squarefree_degree,
        agrees=sturm_real == cert.counts.distinct_real_roots
        and squarefree_degree == cert.counts.distinct_roots,
        note=cert.counts.note,
    )
    text = (
        f"polynomial: {document.polynomial}\n"
        f"distinct roots (rank H_f): {document.distinct_roots}"
        f" / squarefree degree {squarefree_degree}\n"
        f"distinct real roots (signature H_f): {document.distinct_real_roots}"
        f" / Sturm {sturm_real}"
    )
    _emit(document, text, args.json)
    if not document.agrees:
        return constants.EXIT_DISAGREEMENT
    return constants.EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    report = run_selftest(
        degree_max=args.degree_max,
        cases=args.cases,
        seed=args.seed,
        with_lemma2=args.lemma2,
    )
    lines = [
        f"{report.cases} cases (degree <= {report.degree_max},"
        f" seed {report.seed}): {len(report.failures)} failures"
    ]
    lines.extend(f"  {f.polynomial}: {f.problem}" for f in report.failures)
    _emit(report, "\n".join(lines), args.json)
    return constants.EXIT_OK if report.ok else constants.EXIT_DISAGREEMENT


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    constants.CHECK: cmd_check,
    constants.MATRIX: cmd_matrix,
    constants.WITNESS: cmd_witness,
    constants.COUNTS: cmd_counts,
    constants.SELFTEST: cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realroot-cert",
        description="Certify real-rootedness of rational polynomials through"
        " the Hermite matrix of power sums.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v info, -vv debug"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_poly(p: argparse.ArgumentParser):
        p.add_argument(
            "poly",
            help='expression in x such as "x^2-1", an ascending coefficient'
            ' list such as "-1, 0, 1", or "-" to read stdin',
        )
        p.add_argument(
            "--coeffs",
            action="store_true",
            help="read the polynomial as an ascending coefficient list",
        )
        p.add_argument("--json", action="store_true", help="JSON output")
        return p

    check = with_poly(sub.add_parser(constants.CHECK, help="verdict + certificate"))
    check.add_argument(
        "--lemma2", action="store_true", help="attach the interpolation witness"
    )
    check.add_argument(
        "--oracle", action="store_true", help="cross-check with Sturm sequences"
    )
    with_poly(sub.add_parser(constants.MATRIX, help="power sums and H_f"))
    with_poly(sub.add_parser(constants.WITNESS, help="negativity witnesses"))
    with_poly(sub.add_parser(constants.COUNTS, help="distinct root counts"))

    selftest = sub.add_parser(constants.SELFTEST, help="corpus equivalence run")
    selftest.add_argument(
        "--degree-max", type=int, default=config.SELFTEST_DEGREE_MAX
    )
    selftest.add_argument("--cases", type=int, default=config.SELFTEST_CASES)
    selftest.add_argument("--seed", type=int, default=config.SELFTEST_SEED)
    selftest.add_argument(
        "--lemma2", action="store_true", help="also build interpolation witnesses"
    )
    selftest.add_argument("--json", action="store_true", help="JSON output")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose >= 2:
        configure_logging("DEBUG")
    elif args.verbose == 1:
        configure_logging("INFO")
    else:
        configure_logging()
    try:
        return COMMANDS[args.command](args)
    except PolynomialError as e:
        print(f"error: {e}", file=sys.stderr)
        return constants.EXIT_USAGE
    except (RootFindingError, InterpolationError, WitnessError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return constants.EXIT_DISAGREEMENT

"""
Certificate documents

Exact rationals serialize as 'num/den' strings and parse back exactly, so a
certificate survives a JSON round trip unchanged.
"""

from enum import Enum
from fractions import Fraction
from typing import Annotated, List, Optional, Tuple

from commons import format_rational, to_fraction
from inertia import Inertia
from pydantic import BaseModel, ConfigDict, PlainSerializer
from pydantic.functional_validators import PlainValidator
from witness import Lemma2Witness

# -- Validators --

Rational = Annotated[
    Fraction,
    PlainValidator(to_fraction),
    PlainSerializer(format_rational, return_type=str),
]

CLASSICAL_EXTENSION = "classical extension"


class Verdict(str, Enum):
    REAL_ROOTED = "RealRooted"
    NOT_REAL_ROOTED = "NotRealRooted"


class Counts(BaseModel):
    """
    Rank / signature readings of H_f. Not part of the PSD equivalence,
    cross-checked against the Sturm oracle.
    """

    model_config = ConfigDict(frozen=True)

    distinct_roots: int
    distinct_real_roots: int
    note: str = CLASSICAL_EXTENSION


class Lemma2Document(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lambda1: Tuple[float, float]  # (re, im)
    mu1: int
    interpolant: List[Tuple[float, float]]
    x: List[float]
    expected: int
    achieved: float
    exact_value: Rational
    lemma1_defect: float
    imag_defect: float

    @classmethod
    def from_witness(cls, witness: Lemma2Witness) -> "Lemma2Document":
        return cls(
            lambda1=(witness.lambda1.real, witness.lambda1.imag),
            mu1=witness.mu1,
            interpolant=[(c.real, c.imag) for c in witness.interpolant.coeffs],
            x=list(witness.x),
            expected=witness.expected,
            achieved=witness.achieved,
            exact_value=witness.exact_value,
            lemma1_defect=witness.lemma1_defect,
            imag_defect=witness.imag_defect,
        )


class Certificate(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    verdict: Verdict
    degree: int
    polynomial: str
    power_sums: List[Rational]
    hermite: List[List[Rational]]
    inertia: Inertia
    diagonal: List[Rational]
    transform: List[List[Rational]]
    witness: Optional[List[Rational]] = None
    witness_value: Optional[Rational] = None
    counts: Counts
    lemma2: Optional[Lemma2Document] = None

    @property
    def is_real_rooted(self) -> bool:
        return self.verdict == Verdict.REAL_ROOTED

"""
Output documents of the CLI subcommands
"""

from typing import List, Optional

from certifier import Certificate, Lemma2Document, Rational
from pydantic import BaseModel, ConfigDict


class OracleReport(BaseModel):
    real_rooted: bool
    distinct_real_roots: int
    distinct_roots: int
    agrees: bool


class CheckDocument(BaseModel):
    certificate: Certificate
    verified: bool
    verification_reason: str
    oracle: Optional[OracleReport] = None


class MatrixDocument(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    polynomial: str
    degree: int
    power_sums: List[Rational]
    hermite: List[List[Rational]]


class WitnessDocument(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    polynomial: str
    real_rooted: bool
    witness: Optional[List[Rational]] = None
    witness_value: Optional[Rational] = None
    lemma2: Optional[Lemma2Document] = None


class CountsDocument(BaseModel):
    polynomial: str
    distinct_roots: int
    distinct_real_roots: int
    sturm_distinct_real_roots: int
    squarefree_degree: int
    agrees: bool
    note: str


class CaseFailure(BaseModel):
    polynomial: str
    problem: str


class SelftestReport(BaseModel):
    cases: int
    degree_max: int
    seed: int
    failures: List[CaseFailure] = []

    @property
    def ok(self) -> bool:
        return not self.failures

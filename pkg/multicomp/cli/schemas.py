"""
JSON output models for the command-line frontend
Rationals travel as strings ("1/3"), integers as JSON integers
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


def rational(value: Fraction) -> str:
    """Exact text for a rational: 3, -1/2"""
    return str(Fraction(value))


class TriangleDocument(BaseModel):
    """Counts c(n, l) row by row"""
    k: int = Field(..., ge=1)
    statistic: str
    first_index: int = Field(..., ge=0)
    rows: List[List[int]]


class SequenceDocument(BaseModel):
    """First terms of a named sequence"""
    name: str
    k: int = Field(..., ge=1)
    via: str
    start: int = Field(..., ge=0, description="Index of the first value")
    values: List[int]


class CoefficientEntry(BaseModel):
    composition: List[int]
    value: str
    closed_form: str


class IdentityEntry(BaseModel):
    lhs: str
    rhs: str


class ClusterDocument(BaseModel):
    """Decomposition of b(n) over g-compositions and/or the coefficient identity"""
    g: int = Field(..., ge=2)
    n: int = Field(..., ge=1)
    q: Optional[int] = None
    sign: Optional[int] = None
    coefficients: Optional[List[CoefficientEntry]] = None
    identity: Optional[IdentityEntry] = None


class PolynomialTerm(BaseModel):
    monomial: str
    coefficient: str


class PolynomialDocument(BaseModel):
    """b(n) as explicit terms"""
    g: int = Field(..., ge=2)
    n: int = Field(..., ge=1)
    q: int = Field(..., ge=1)
    text: str
    terms: List[PolynomialTerm]


class CheckRecord(BaseModel):
    suite: str
    name: str
    passed: bool
    detail: str = ""


class VerifyReport(BaseModel):
    """Outcome of a verify run"""
    suites: List[str]
    max_n: int
    max_k: int
    passed: bool
    checks: List[CheckRecord]
    notes: List[str] = Field(default_factory=list)
    tables: Dict[str, List[Dict[str, Any]]] = Field(default_factory=dict)

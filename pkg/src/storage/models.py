"""
Report models for classification runs
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from src.algebra import MonomialOrder, format_polynomial
from src.groebner import GroebnerResult
from src.linalg import PolyMatrix


class Verdict(Enum):
    STRUCTURALLY_REJECTED = "structurally-rejected"
    UNIT_IDEAL = "unit-ideal"
    SELF_DUAL_FAMILY = "self-dual-family"


class Numbering(Enum):
    ALL = "all-70"
    CONTAINS_1 = "contains-1"
    CONTAINS_1_4 = "contains-1-4"


class Mode(Enum):
    NONASSOC = "nonassoc"
    ASSOC = "assoc"
    ONE_OP = "one-op"


@dataclass
class FamilyCheck:
    """Verification record of one transcribed solution family"""
    name: str
    verified: bool
    operad_level: Optional[bool] = None
    displayed_matrix: Optional[bool] = None
    coefficient_sums: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "verified": self.verified,
            "operadLevel": self.operad_level,
            "displayedMatrix": self.displayed_matrix,
            "coefficientSums": self.coefficient_sums,
        }


@dataclass
class CaseReport:
    """Verdict for one RCF case"""
    case_id: int
    numbering: Numbering
    pivots: Tuple[int, ...]
    parameter_count: int
    verdict: Verdict
    order: MonomialOrder
    obstruction: Optional[PolyMatrix] = None
    groebner: Optional[GroebnerResult] = None
    signature_verified: Optional[bool] = None
    signature_source: Optional[str] = None
    families: List[FamilyCheck] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def gb_size(self) -> Optional[int]:
        return self.groebner.size if self.groebner is not None else None

    def pivots_label(self) -> str:
        return "{" + ",".join(str(c) for c in self.pivots) + "}"

    def to_dict(self) -> Dict[str, Any]:
        greatest = greatest_lex = None
        if self.groebner is not None and self.groebner.basis:
            greatest = format_polynomial(self.groebner.greatest(), self.order)
            greatest_lex = format_polynomial(self.groebner.greatest_lex(), self.order)
        return {
            "caseId": self.case_id,
            "numbering": self.numbering.value,
            "pivots": list(self.pivots),
            "verdict": self.verdict.value,
            "parameterCount": self.parameter_count,
            "gbSize": self.gb_size,
            "gbGreatest": greatest,
            "gbGreatestLex": greatest_lex,
            "signatureVerified": self.signature_verified,
            "signatureSource": self.signature_source,
            "families": [f.to_dict() for f in self.families],
            "notes": self.notes,
        }


@dataclass
class OneOperationSolution:
    """Self-dual relation a*(x1 x2)x3 + b*x1(x2 x3), up to scale"""
    a: int
    b: int
    unital: bool
    relation: str

    def to_dict(self) -> Dict[str, Any]:
        return {"a": self.a, "b": self.b, "unital": self.unital, "relation": self.relation}


@dataclass
class ClassificationSummary:
    mode: Mode
    configuration: Dict[str, Any]
    cases: List[CaseReport] = field(default_factory=list)
    solutions: List[OneOperationSolution] = field(default_factory=list)

    def counts(self) -> Dict[str, int]:
        counts = {v.value: 0 for v in Verdict}
        for report in self.cases:
            counts[report.verdict.value] += 1
        return counts

    def case_ids(self, verdict: Verdict) -> List[int]:
        return [r.case_id for r in self.cases if r.verdict is verdict]

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"mode": self.mode.value, "configuration": self.configuration}
        if self.mode is Mode.ONE_OP:
            data["solutions"] = [s.to_dict() for s in self.solutions]
        else:
            data["counts"] = self.counts()
            data["cases"] = [r.to_dict() for r in self.cases]
        return data

"""
Case tables loaded from config/cases.yaml: parameter zero patterns, signature
pairs and the relation matrices of the nonassociative cases.
"""
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Tuple

import yaml
from loguru import logger

from config.settings import CASES_FILE
from src.algebra import VariableSet
from src.errors import InputFormatError, InvariantViolationError, UnknownNameError
from src.linalg import PARAM_LETTERS, PivotPattern, PolyMatrix, build_parametric_rcf
from .subsets import SubsetChoice, subset_for


@dataclass(frozen=True)
class SignaturePair:
    """Diagonals of D and E, entries +-1"""
    D: Tuple[int, ...]
    E: Tuple[int, ...]
    source: str = "statement"

    def __post_init__(self):
        for value in self.D + self.E:
            if value not in (1, -1):
                raise InputFormatError(f"signature entries must be +-1, got {value}")

    def matrices(self, variables: VariableSet) -> Tuple[PolyMatrix, PolyMatrix]:
        return PolyMatrix.diagonal(list(self.D), variables), PolyMatrix.diagonal(list(self.E), variables)


@lru_cache(maxsize=4)
def load_case_tables(path: Path = CASES_FILE) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except FileNotFoundError:
        raise InputFormatError(f"case tables not found: {path}") from None
    except yaml.YAMLError as e:
        raise InputFormatError(f"{path}: {e}") from None
    logger.debug(f"[Cases] loaded {path}")
    return data


def family_cases() -> List[int]:
    """The 14 nonassociative cases with self-dual solutions"""
    return sorted(load_case_tables()["nonassociative"]["parameter_zeros"])


def _require_family_case(case_id: int):
    if case_id not in family_cases():
        raise UnknownNameError(f"case {case_id} is not one of the self-dual cases {family_cases()}")


def signature_for(case_id: int) -> SignaturePair:
    _require_family_case(case_id)
    entry = load_case_tables()["nonassociative"]["signatures"][case_id]
    return SignaturePair(tuple(entry["D"]), tuple(entry["E"]), entry.get("source", "statement"))


def all_parameter_names(rows: int = 4) -> List[str]:
    return [f"{letter}{i}" for letter in PARAM_LETTERS for i in range(1, rows + 1)]


def nonassoc_relation_matrix(subset: SubsetChoice, scheme: str) -> PolyMatrix:
    """
    Parametric RCF for a pivot subset. For the self-dual cases the computed
    zero entries of P are checked against the transcribed table.
    """
    R, names = build_parametric_rcf(PivotPattern(subset.columns), 8, scheme)
    if scheme == "wxyz" and subset.case_number in family_cases() and 1 in subset.columns:
        expected = set(load_case_tables()["nonassociative"]["parameter_zeros"][subset.case_number])
        computed = set(all_parameter_names()) - set(names.values())
        if computed != expected:
            raise InvariantViolationError(
                f"case {subset.case_number}: zero entries of P {sorted(computed)} "
                f"differ from the table {sorted(expected)}"
            )
    return R


def non_pivot_columns(pivots: Tuple[int, ...], n: int = 8) -> List[int]:
    return [c for c in range(1, n + 1) if c not in pivots]


def parameter_matrix(case_id: int) -> PolyMatrix:
    """4x4 block of R on the non-pivot columns, P = [W, X, Y, Z]"""
    _require_family_case(case_id)
    subset = subset_for(case_id, {1})
    R = nonassoc_relation_matrix(subset, "wxyz")
    return R.select_columns(non_pivot_columns(subset.columns))


def signature_matrix(case_id: int) -> PolyMatrix:
    """P^t D P - E"""
    P = parameter_matrix(case_id)
    D, E = signature_for(case_id).matrices(P.variables)
    return P.transpose() @ D @ P - E

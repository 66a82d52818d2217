"""
Transcribed solution families and their verification.

A family assigns every parameter of a case a polynomial in auxiliary
variables (iota, lam, s, ...) constrained by side relations such as
iota^2 + 1 and s^2 + lam^2 - 1. Verification is reduction to zero modulo the
Gröbner basis of the side relations.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional

from loguru import logger

from src.algebra import MonomialOrder, OrderKind, Polynomial, VariableSet, format_polynomial, normal_form, parse_polynomial
from src.errors import UnassignedParameterError
from src.groebner import GroebnerResult, groebner_basis
from src.linalg import PolyMatrix, stack_reduce
from src.operads import coefficient_sums, koszul_dual_matrix
from src.storage import FamilyCheck
from .cases import load_case_tables


@dataclass
class SolutionFamily:
    name: str
    case_id: int
    mode: str
    auxiliary: VariableSet
    side_relations: List[Polynomial]
    assignments: Dict[str, Polynomial]
    displayed_matrix: Optional[PolyMatrix] = None

    @property
    def order(self) -> MonomialOrder:
        return MonomialOrder(OrderKind.GREVLEX, self.auxiliary)

    def side_basis(self) -> GroebnerResult:
        return groebner_basis(self.side_relations, self.order, "pairs")

    def reduce(self, f: Polynomial, side: GroebnerResult) -> Polynomial:
        return normal_form(f, side.basis, self.order)

    def substituted(self, M: PolyMatrix) -> PolyMatrix:
        missing = [n for n in M.variables.names if n not in self.assignments]
        if missing:
            raise UnassignedParameterError(f"family {self.name}: no value for {', '.join(missing)}")
        return M.substitute(self.assignments, self.auxiliary)


def _family_from_dict(entry: dict, mode: str) -> SolutionFamily:
    aux = VariableSet(tuple(entry["auxiliary"]))
    side = [parse_polynomial(s, aux) for s in entry.get("side_relations", [])]
    assignments = {name: parse_polynomial(str(value), aux) for name, value in entry["assignments"].items()}
    displayed = None
    if entry.get("displayed_matrix"):
        displayed = PolyMatrix.from_strings(entry["displayed_matrix"], aux, 8)
    return SolutionFamily(entry["name"], int(entry["case"]), mode, aux, side, assignments, displayed)


def load_families(mode: str) -> List[SolutionFamily]:
    """mode: 'nonassociative' or 'associative'"""
    section = load_case_tables().get(mode, {})
    return [_family_from_dict(entry, mode) for entry in section.get("families", [])]


def families_for(mode: str, case_id: int) -> List[SolutionFamily]:
    return [f for f in load_families(mode) if f.case_id == case_id]


def verify_solution_family(family: SolutionFamily, obstruction: PolyMatrix) -> bool:
    """Every entry of T vanishes modulo the side relations at the family's values"""
    side = family.side_basis()
    T = family.substituted(obstruction)
    return all(family.reduce(e, side).is_zero() for e in T.entries())


def verify_family_self_duality(family: SolutionFamily, relation_matrix: PolyMatrix) -> bool:
    """Dual of the substituted relation matrix reduces onto it modulo the side relations"""
    side = family.side_basis()
    R = family.substituted(relation_matrix)
    T = stack_reduce(R, koszul_dual_matrix(R))
    return all(family.reduce(e, side).is_zero() for e in T.entries())


def compare_displayed_matrix(family: SolutionFamily, relation_matrix: PolyMatrix) -> Optional[bool]:
    if family.displayed_matrix is None:
        return None
    side = family.side_basis()
    R = family.substituted(relation_matrix)
    if R.shape != family.displayed_matrix.shape:
        return False
    return all(
        family.reduce(a - b, side).is_zero()
        for a, b in zip(R.entries(), family.displayed_matrix.entries())
    )


def check_family(family: SolutionFamily, relation_matrix: PolyMatrix, obstruction: PolyMatrix) -> FamilyCheck:
    verified = verify_solution_family(family, obstruction)
    operad_level = verify_family_self_duality(family, relation_matrix)
    displayed = compare_displayed_matrix(family, relation_matrix)
    side = family.side_basis()
    sums = [
        format_polynomial(family.reduce(s, side), family.order)
        for s in coefficient_sums(family.substituted(relation_matrix))
    ]
    logger.info(
        f"[Families] {family.name}: verified={verified} operad_level={operad_level} "
        f"displayed={displayed}"
    )
    return FamilyCheck(family.name, verified, operad_level, displayed, sums)

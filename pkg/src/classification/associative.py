"""
Classification when both operations are associative.

Relation matrices contain the associativity rows [A]; their pivots include
columns 1 and 4, which leaves 15 pivot patterns.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from loguru import logger

from src.algebra import Polynomial, VariableSet
from src.errors import InconsistentConstraintsError, InvariantViolationError
from src.linalg import PivotPattern, PolyMatrix, build_parametric_rcf, stack_reduce
from src.storage import CaseReport, Numbering, Verdict
from .families import check_family, families_for
from .pipeline import PipelineConfig, run_obstruction_pipeline
from .subsets import SubsetChoice, enumerate_subsets, subset_for

ASSOC_PIVOTS = (1, 4)
# (x1|-x2)|-x3 - x1|-(x2|-x3)  and  (x1-|x2)-|x3 - x1-|(x2-|x3)
ASSOCIATIVITY_ROWS = (
    (1, 0, 0, 0, -1, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, -1),
)


@dataclass
class AssociativityResult:
    matrix: PolyMatrix
    assignments: Dict[str, Polynomial] = field(default_factory=dict)
    constraint_count: int = 0


def associativity_matrix(variables: VariableSet) -> PolyMatrix:
    return PolyMatrix(ASSOCIATIVITY_ROWS, variables, 8)


def assoc_subsets() -> List[SubsetChoice]:
    return enumerate_subsets(4, 8, ASSOC_PIVOTS)


def assoc_parametric_matrix(subset: SubsetChoice) -> PolyMatrix:
    R, _ = build_parametric_rcf(PivotPattern(subset.columns), 8, "wxyz")
    return R


def assoc_build_cases() -> List[Tuple[SubsetChoice, PolyMatrix]]:
    """The 15 parametric matrices with pivots at columns 1 and 4"""
    return [(s, assoc_parametric_matrix(s)) for s in assoc_subsets()]


def _linear_coefficient(f: Polynomial, name: str) -> Fraction:
    return f.terms.get(f.variables.generator(name), Fraction(0))


def apply_associativity_conditions(R: PolyMatrix) -> AssociativityResult:
    """
    Force the rows of [A] into the row space of R.

    The rows of [A] reduced by R's pivots have affine-linear entries; each
    nonzero one is solved for its last variable in ring order, the solution is
    substituted everywhere, and the ring shrinks to the remaining parameters.

    Raises:
        InconsistentConstraintsError: a constraint reduces to a nonzero constant
    """
    variables = R.variables
    residue = stack_reduce(R, associativity_matrix(variables))
    constraints = residue.nonzero_entries()
    solved: Dict[str, Polynomial] = {}
    for c in constraints:
        if not c.is_affine_linear():
            raise InvariantViolationError(f"associativity condition of degree {c.total_degree()}")
        c = c.substitute(solved) if solved else c
        if c.is_zero():
            continue
        if c.is_constant():
            raise InconsistentConstraintsError(f"associativity condition reduces to {c.constant_value()}")
        var = c.used_variables()[-1]
        coef = _linear_coefficient(c, var)
        x = Polynomial.variable(var, variables)
        value = (x * coef - c).scale(1 / coef)
        solved = {k: v.substitute({var: value}) for k, v in solved.items()}
        solved[var] = value

    remaining = VariableSet(tuple(n for n in variables.names if n not in solved))
    matrix = R.substitute(solved, remaining)
    logger.debug(
        f"[Associative] {len(constraints)} conditions, {len(solved)} parameters eliminated, "
        f"{len(remaining)} remain"
    )
    return AssociativityResult(matrix, solved, len(constraints))


def assoc_relation_matrix(case_id: int) -> PolyMatrix:
    subset = subset_for(case_id, ASSOC_PIVOTS)
    return apply_associativity_conditions(assoc_parametric_matrix(subset)).matrix


def assoc_case(case_id: int, config: Optional[PipelineConfig] = None) -> CaseReport:
    config = config or PipelineConfig()
    subset = subset_for(case_id, ASSOC_PIVOTS)
    conditioned = apply_associativity_conditions(assoc_parametric_matrix(subset))
    R = conditioned.matrix
    outcome = run_obstruction_pipeline(R, config, f"assoc case {case_id} {subset.columns}")

    report = CaseReport(
        case_id=case_id,
        numbering=Numbering.CONTAINS_1_4,
        pivots=subset.columns,
        parameter_count=subset.parameter_count,
        verdict=outcome.verdict,
        order=outcome.order,
        obstruction=outcome.obstruction,
        groebner=outcome.groebner,
    )
    report.notes.append(f"{len(R.variables)} parameters after associativity conditions")
    if outcome.constants:
        i, j, c = outcome.constants[0]
        report.notes.append(f"T has the constant entry {c} at ({i},{j})")
    if config.verify_families and outcome.verdict is Verdict.SELF_DUAL_FAMILY:
        for family in families_for("associative", case_id):
            report.families.append(check_family(family, R, outcome.obstruction))
    return report

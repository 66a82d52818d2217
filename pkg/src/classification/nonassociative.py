"""
Classification of the 70 pivot patterns of rank-4 relation matrices.
"""
from typing import Optional

from loguru import logger

from config.settings import CLASSIFICATION
from src.groebner import GroebnerResult, groebner_basis
from src.linalg import PolyMatrix, monic_diagonal_normalize
from src.storage import CaseReport, Numbering, Verdict
from .cases import (
    family_cases, non_pivot_columns, nonassoc_relation_matrix, signature_for,
    signature_matrix,
)
from .families import check_family, families_for
from .pipeline import PipelineConfig, run_obstruction_pipeline
from .subsets import SubsetChoice, subset_for

ALL_CASES = 70


def naming_scheme(subset: SubsetChoice) -> str:
    if 1 in subset.columns and subset.case_number in family_cases():
        return CLASSIFICATION["family_scheme"]
    return CLASSIFICATION["default_scheme"]


def relation_matrix(case_id: int) -> PolyMatrix:
    subset = subset_for(case_id)
    return nonassoc_relation_matrix(subset, naming_scheme(subset))


def normalized_obstruction(T: PolyMatrix, pivots, order) -> PolyMatrix:
    """T'' : the non-pivot block of T with monic diagonal"""
    block = T.select_columns(non_pivot_columns(tuple(pivots)))
    normalized, _ = monic_diagonal_normalize(block, order)
    return normalized


def verify_signature_equivalence(
    case_id: int,
    config: Optional[PipelineConfig] = None,
    groebner: Optional[GroebnerResult] = None,
) -> bool:
    """ideal(T) == ideal(P^t D P - E), compared through reduced Gröbner bases"""
    config = config or PipelineConfig()
    target = signature_matrix(case_id)
    order = config.make_order(target.variables)
    if groebner is None:
        outcome = run_obstruction_pipeline(relation_matrix(case_id), config, f"case {case_id}")
        groebner = outcome.groebner
        if groebner is None:
            return False
    expected = groebner_basis(target.nonzero_entries(), order, config.strategy, config.workers)
    verified = expected.basis == groebner.basis
    logger.info(f"[Classifier] case {case_id}: signature equivalence {verified}")
    return verified


def nonassoc_case(case_id: int, config: Optional[PipelineConfig] = None) -> CaseReport:
    """
    Run one case over the all-70 numbering (ids 1..35 coincide with the
    numbering of the subsets containing column 1).
    """
    config = config or PipelineConfig()
    subset = subset_for(case_id)
    R = nonassoc_relation_matrix(subset, naming_scheme(subset))
    outcome = run_obstruction_pipeline(R, config, f"nonassoc case {case_id} {subset.columns}")
    numbering = Numbering.CONTAINS_1 if 1 in subset.columns else Numbering.ALL

    report = CaseReport(
        case_id=case_id,
        numbering=numbering,
        pivots=subset.columns,
        parameter_count=subset.parameter_count,
        verdict=outcome.verdict,
        order=outcome.order,
        obstruction=outcome.obstruction,
        groebner=outcome.groebner,
    )
    if outcome.constants:
        i, j, c = outcome.constants[0]
        report.notes.append(f"T has the constant entry {c} at ({i},{j})")

    if case_id in family_cases() and 1 in subset.columns:
        signature = signature_for(case_id)
        report.signature_source = signature.source
        if signature.source == "proof":
            report.notes.append("signature (D, E) taken from the proof, not the statement")
        if config.verify_signatures and outcome.verdict is Verdict.SELF_DUAL_FAMILY:
            report.signature_verified = verify_signature_equivalence(case_id, config, outcome.groebner)
        if config.verify_families and outcome.verdict is Verdict.SELF_DUAL_FAMILY:
            for family in families_for("nonassociative", case_id):
                report.families.append(check_family(family, R, outcome.obstruction))
    return report

"""
Classification drivers for self-dual relation spaces
"""
from .pipeline import PipelineConfig, PipelineOutcome, obstruction_generators, run_obstruction_pipeline
from .subsets import SubsetChoice, enumerate_subsets, subset_for
from .cases import (
    SignaturePair, load_case_tables, family_cases, signature_for, parameter_matrix,
    signature_matrix, nonassoc_relation_matrix, non_pivot_columns,
)
from .families import (
    SolutionFamily, load_families, families_for, verify_solution_family,
    verify_family_self_duality, compare_displayed_matrix, check_family,
)
from .nonassociative import (
    ALL_CASES, relation_matrix, normalized_obstruction, verify_signature_equivalence,
    nonassoc_case,
)
from .associative import (
    ASSOCIATIVITY_ROWS, AssociativityResult, associativity_matrix, assoc_build_cases,
    apply_associativity_conditions, assoc_relation_matrix, assoc_case,
)
from .one_operation import (
    self_duality_condition, rational_roots, is_self_dual, one_operation_classification,
)
from .runner import case_ids_for, run_cases, run_classification

__all__ = [
    "PipelineConfig", "PipelineOutcome", "obstruction_generators", "run_obstruction_pipeline",
    "SubsetChoice", "enumerate_subsets", "subset_for",
    "SignaturePair", "load_case_tables", "family_cases", "signature_for", "parameter_matrix",
    "signature_matrix", "nonassoc_relation_matrix", "non_pivot_columns",
    "SolutionFamily", "load_families", "families_for", "verify_solution_family",
    "verify_family_self_duality", "compare_displayed_matrix", "check_family",
    "ALL_CASES", "relation_matrix", "normalized_obstruction", "verify_signature_equivalence",
    "nonassoc_case",
    "ASSOCIATIVITY_ROWS", "AssociativityResult", "associativity_matrix", "assoc_build_cases",
    "apply_associativity_conditions", "assoc_relation_matrix", "assoc_case",
    "self_duality_condition", "rational_roots", "is_self_dual", "one_operation_classification",
    "case_ids_for", "run_cases", "run_classification",
]

"""
Polynomial matrices and row canonical forms
"""
from .matrix import (
    PolyMatrix, pivot_columns, negate_columns, fix_leading_signs, structured_nullspace,
    stack_reduce, monic_diagonal_normalize,
)
from .rcf import (
    PARAM_LETTERS, PivotPattern, parameter_count, parameter_name, build_parametric_rcf, rcf_numeric,
    numeric_rank, same_row_space, constant_matrix,
)

__all__ = [
    "PolyMatrix", "pivot_columns", "negate_columns", "fix_leading_signs", "structured_nullspace",
    "stack_reduce", "monic_diagonal_normalize",
    "PARAM_LETTERS", "PivotPattern", "parameter_count", "parameter_name", "build_parametric_rcf", "rcf_numeric",
    "numeric_rank", "same_row_space", "constant_matrix",
]

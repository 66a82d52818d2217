"""
Quadratic nonsymmetric operads with two binary operations
"""
from .trees import (
    LEFT_OP, RIGHT_OP, OPERATIONS, TreeMonomial, tree_shapes, dimension, enumerate_basis,
    quadratic_basis_labels,
)
from .quadratic import (
    QUADRATIC_DIM, BASIS_LABELS, NEGATED_COLUMNS, QuadraticSpace, inner_product_form,
    koszul_dual_matrix, loday_dual, self_dual_obstruction, osborn_unital_check,
    coefficient_sums, orthogonal, rank_pair,
)
from .catalog import (
    NamedOperadEntry, DualPairCheck, relation_rows, catalog_names, catalog,
    check_dual_pair, check_all_duals,
)

__all__ = [
    "LEFT_OP", "RIGHT_OP", "OPERATIONS", "TreeMonomial", "tree_shapes", "dimension",
    "enumerate_basis", "quadratic_basis_labels",
    "QUADRATIC_DIM", "BASIS_LABELS", "NEGATED_COLUMNS", "QuadraticSpace", "inner_product_form",
    "koszul_dual_matrix", "loday_dual", "self_dual_obstruction", "osborn_unital_check",
    "coefficient_sums", "orthogonal", "rank_pair",
    "NamedOperadEntry", "DualPairCheck", "relation_rows", "catalog_names", "catalog",
    "check_dual_pair", "check_all_duals",
]

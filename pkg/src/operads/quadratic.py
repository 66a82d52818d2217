"""
Quadratic spaces in O(2), Koszul duality and the self-duality obstruction.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from src.algebra import MonomialOrder, Polynomial, VariableSet
from src.errors import RankError, ZeroRelationError
from src.linalg import (
    PolyMatrix, fix_leading_signs, negate_columns, numeric_rank, pivot_columns,
    rcf_numeric, stack_reduce, structured_nullspace,
)
from .trees import quadratic_basis_labels

QUADRATIC_DIM = 8
BASIS_LABELS: Tuple[str, ...] = tuple(quadratic_basis_labels())
# columns 5..8 are the right-nested monomials, where the form is -1
NEGATED_COLUMNS = (5, 6, 7, 8)


@dataclass
class QuadraticSpace:
    """Relation space of a quadratic operad, one row per relation"""
    matrix: PolyMatrix
    labels: Tuple[str, ...] = BASIS_LABELS
    canonical: bool = False

    @classmethod
    def from_matrix(cls, matrix: PolyMatrix) -> "QuadraticSpace":
        """Canonicalize constant matrices; parametric ones must already be RCF"""
        if matrix.is_constant():
            return cls(rcf_numeric(matrix), canonical=True)
        pivot_columns(matrix)
        return cls(matrix, canonical=True)

    @property
    def rank(self) -> int:
        if self.matrix.is_constant():
            return numeric_rank(self.matrix)
        return self.matrix.nrows

    @property
    def variables(self) -> VariableSet:
        return self.matrix.variables

    def same_space(self, other: "QuadraticSpace") -> bool:
        a, b = rcf_numeric(self.matrix), rcf_numeric(other.matrix.in_ring(self.variables))
        return a == b

    def to_dict(self, order: MonomialOrder) -> Dict[str, Any]:
        return {
            "cols": self.matrix.ncols,
            "basisLabels": list(self.labels),
            "rows": self.matrix.to_strings(order),
            "rank": self.rank,
        }


def inner_product_form(variables: Optional[VariableSet] = None) -> PolyMatrix:
    """Gram matrix of the duality form: +1 on columns 1-4, -1 on columns 5-8"""
    variables = variables or VariableSet(())
    signs = [-1 if c in NEGATED_COLUMNS else 1 for c in range(1, QUADRATIC_DIM + 1)]
    return PolyMatrix.diagonal(signs, variables)


def koszul_dual_matrix(R: PolyMatrix, negated: Sequence[int] = NEGATED_COLUMNS) -> PolyMatrix:
    """
    Dual relation rows of an RCF matrix with unit pivots: negate the columns
    where the form is -1, restore positive pivots, take the structured nullspace.
    """
    if R.nrows == 0:
        return PolyMatrix.identity(R.ncols, R.variables)
    pivots = pivot_columns(R)
    flipped = negate_columns(R, negated)
    restored = fix_leading_signs(flipped, pivots)
    return structured_nullspace(restored, pivots)


def loday_dual(R: QuadraticSpace) -> QuadraticSpace:
    """
    Koszul dual relation space.

    Returns an RCF result when the entries are constant; for parametric input
    the rows are the structured nullspace basis (unit entries on the free columns).
    """
    dual = koszul_dual_matrix(R.matrix)
    if dual.is_constant():
        return QuadraticSpace(rcf_numeric(dual), R.labels, canonical=True)
    return QuadraticSpace(dual, R.labels, canonical=False)


def self_dual_obstruction(R: QuadraticSpace) -> PolyMatrix:
    """
    T = stack_reduce(R, dual(R)): R is self-dual exactly on the zero set of
    the ideal generated by the entries of T.
    """
    if R.matrix.nrows != QUADRATIC_DIM // 2:
        raise RankError(f"self-duality needs rank 4, got {R.matrix.nrows}")
    dual = koszul_dual_matrix(R.matrix)
    return stack_reduce(R.matrix, dual)


def osborn_unital_check(row: Sequence) -> bool:
    """A relation can hold in a unital algebra iff its coefficients sum to 0"""
    values = [c.constant_value() if isinstance(c, Polynomial) else Fraction(c) for c in row]
    if not any(values):
        raise ZeroRelationError("zero relation row")
    return sum(values) == 0


def coefficient_sums(M: PolyMatrix) -> List[Polynomial]:
    """Per-row coefficient sums"""
    zero = Polynomial.zero(M.variables)
    return [sum(row, zero) for row in M.rows]


def orthogonal(a: PolyMatrix, b: PolyMatrix) -> bool:
    """Every row of a is orthogonal to every row of b under the duality form"""
    gram = a @ inner_product_form(a.variables) @ b.in_ring(a.variables).transpose()
    return gram.is_zero()


def rank_pair(R: QuadraticSpace) -> Tuple[int, int]:
    r = R.rank
    logger.debug(f"[Duality] rank {r}, dual rank {QUADRATIC_DIM - r}")
    return r, QUADRATIC_DIM - r

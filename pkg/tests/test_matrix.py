import pytest

from src.algebra import MonomialOrder, OrderKind, VariableSet
from src.errors import DimensionMismatchError, PivotStructureError
from src.linalg import (
    PolyMatrix, fix_leading_signs, monic_diagonal_normalize, negate_columns, pivot_columns,
    stack_reduce, structured_nullspace,
)

AB = VariableSet(("A", "B"))
ORDER = MonomialOrder(OrderKind.GREVLEX, AB)


def m(rows, ncols=None):
    return PolyMatrix(rows, AB, ncols)


def test_entries_and_shape():
    M = m([["1", "0", "A"], ["0", "1", "B^2 - 1"]])
    assert M.shape == (2, 3)
    assert M.entry(2, 3) == M[1, 2]
    assert M.to_strings(ORDER) == [["1", "0", "A"], ["0", "1", "B^2 - 1"]]
    assert M.column(2) == list(M.transpose().rows[2])


def test_ragged_rows_rejected():
    with pytest.raises(DimensionMismatchError):
        m([[1, 0], [1]])
    with pytest.raises(DimensionMismatchError):
        m([])


def test_products_and_sums():
    M = m([["A", "1"], ["0", "B"]])
    I = PolyMatrix.identity(2, AB)
    assert M @ I == M
    assert (M @ M.transpose()).entry(1, 1) == M.entry(1, 1) ** 2 + 1
    assert (M - M).is_zero()
    assert -M + M == PolyMatrix.zeros(2, 2, AB)
    with pytest.raises(DimensionMismatchError):
        M @ m([[1, 2, 3]])


def test_pivot_columns():
    assert pivot_columns(m([[1, 0, "A"], [0, -1, "B"]])) == [1, 2]
    with pytest.raises(PivotStructureError):
        pivot_columns(m([[0, 0, 0]]))
    with pytest.raises(PivotStructureError):
        pivot_columns(m([[2, 0, "A"]]))
    with pytest.raises(PivotStructureError):
        pivot_columns(m([["A", 1]]))
    with pytest.raises(PivotStructureError):
        pivot_columns(m([[0, 1], [1, 0]]))


def test_negate_and_fix_signs():
    M = m([[1, 0, "A", 0], [0, 0, "B", 1]])
    flipped = negate_columns(M, (3, 4))
    assert flipped.to_strings(ORDER) == [["1", "0", "-A", "0"], ["0", "0", "-B", "-1"]]
    assert fix_leading_signs(flipped, [1, 4]).rows[1] == m([[0, 0, "B", 1]]).rows[0]


def test_structured_nullspace():
    M = m([[1, 0, "A", 0, "B"], [0, 1, "B", 0, 2]])
    N = structured_nullspace(M, [1, 2])
    assert N.to_strings(ORDER) == [
        ["-A", "-B", "1", "0", "0"],
        ["0", "0", "0", "1", "0"],
        ["-B", "-2", "0", "0", "1"],
    ]
    assert (M @ N.transpose()).is_zero()


def test_structured_nullspace_needs_rcf():
    with pytest.raises(PivotStructureError):
        structured_nullspace(m([[1, "A"], [1, 1]]), [1, 2])
    with pytest.raises(PivotStructureError):
        structured_nullspace(m([[-1, "A"]]), [1])


def test_stack_reduce_clears_pivot_columns():
    upper = m([[1, "A", 0, "B"], [0, 0, 1, "A"]])
    lower = m([["B", 1, 2, 0]])
    out = stack_reduce(upper, lower)
    assert out.entry(1, 1) == 0 and out.entry(1, 3) == 0
    assert out.to_strings(ORDER) == [["0", "-A*B + 1", "0", "-B^2 - 2*A"]]


def test_monic_diagonal_normalize():
    T = m([["2*A", "4"], ["0", "0"]])
    out, skipped = monic_diagonal_normalize(T, ORDER)
    assert out.to_strings(ORDER) == [["A", "2"], ["0", "0"]]
    assert skipped == [2]
    with pytest.raises(DimensionMismatchError):
        monic_diagonal_normalize(m([[1, 2, 3]]), ORDER)


def test_stack_and_select():
    M = m([[1, "A", 3]]).stack(m([["B", 0, 1]]))
    assert M.select_columns([3, 1]).to_strings(ORDER) == [["3", "1"], ["1", "B"]]
    assert M.substitute({"A": 5}).entry(1, 2) == 5


def test_substitute_into_empty_ring():
    empty = VariableSet(())
    M = m([[1, "A", "B - 1"]]).substitute({"A": 2, "B": 1}, empty)
    assert M.variables == empty
    assert M.is_constant()
    assert M.to_strings(MonomialOrder(OrderKind.GREVLEX, empty)) == [["1", "2", "0"]]

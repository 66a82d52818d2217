import random

import pytest

from src.algebra import MonomialOrder, OrderKind, VariableSet
from src.errors import RankError, ZeroRelationError
from src.linalg import PivotPattern, PolyMatrix, build_parametric_rcf, rcf_numeric, stack_reduce
from src.operads import (
    QuadraticSpace, catalog, coefficient_sums, inner_product_form, koszul_dual_matrix, loday_dual,
    orthogonal, osborn_unital_check, rank_pair, self_dual_obstruction,
)

EMPTY = VariableSet(())
A_ROWS = [[1, 0, 0, 0, -1, 0, 0, 0], [0, 0, 0, 1, 0, 0, 0, -1]]


def _random_space(rng):
    rows = [[rng.randint(-2, 2) for _ in range(8)] for _ in range(rng.randint(1, 7))]
    return QuadraticSpace.from_matrix(PolyMatrix(rows, EMPTY, 8))


def test_inner_product_form():
    G = inner_product_form()
    assert [G.entry(i, i) for i in range(1, 9)] == [1, 1, 1, 1, -1, -1, -1, -1]


def test_dual_of_two_associative():
    R = QuadraticSpace.from_matrix(PolyMatrix(A_ROWS, EMPTY, 8))
    dual = loday_dual(R)
    assert dual.rank == 6
    assert dual.same_space(catalog("dual-two-associative").relations)


def test_completely_associative_is_self_dual():
    R = catalog("completely-associative").relations
    assert loday_dual(R).same_space(R)
    assert self_dual_obstruction(R).is_zero()


@pytest.mark.parametrize("seed", range(10))
def test_dual_is_an_involution(seed):
    rng = random.Random(seed)
    R = _random_space(rng)
    dual = loday_dual(R)
    assert rank_pair(R) == (R.rank, dual.rank)
    assert R.rank + dual.rank == 8
    assert orthogonal(R.matrix, dual.matrix)
    assert loday_dual(dual).same_space(R)


def _space_of_rank(rng, rank):
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(8)] for _ in range(rank)]
        R = QuadraticSpace.from_matrix(PolyMatrix(rows, EMPTY, 8))
        if R.rank == rank:
            return R


@pytest.mark.slow
@pytest.mark.parametrize("rank", range(1, 8))
def test_dual_involution_per_rank(rank):
    rng = random.Random(rank)
    for _ in range(100):
        R = _space_of_rank(rng, rank)
        dual = loday_dual(R)
        assert dual.rank == 8 - rank
        assert orthogonal(R.matrix, dual.matrix)
        assert loday_dual(dual).same_space(R)


def test_empty_and_full_spaces():
    full = QuadraticSpace.from_matrix(PolyMatrix.identity(8, EMPTY))
    assert loday_dual(full).rank == 0
    empty = QuadraticSpace(PolyMatrix([], EMPTY, 8), canonical=True)
    assert loday_dual(empty).rank == 8


def test_parametric_dual_is_orthogonal():
    R, _ = build_parametric_rcf(PivotPattern((1, 3, 5, 7)))
    dual = koszul_dual_matrix(R)
    assert dual.shape == (4, 8)
    assert orthogonal(R, dual)


def test_case_one_obstruction_is_identity_minus_gram():
    R, _ = build_parametric_rcf(PivotPattern((1, 2, 3, 4)))
    order = MonomialOrder(OrderKind.GREVLEX, R.variables)
    T = self_dual_obstruction(QuadraticSpace(R, canonical=True))
    P = R.select_columns([5, 6, 7, 8])
    expected = PolyMatrix.identity(4, R.variables) - P.transpose() @ P
    assert T.select_columns([1, 2, 3, 4]).is_zero()
    assert T.select_columns([5, 6, 7, 8]) == expected
    assert T.to_strings(order)[0][4] == "-W1^2 - W2^2 - W3^2 - W4^2 + 1"


def test_obstruction_needs_rank_four():
    R = QuadraticSpace.from_matrix(PolyMatrix(A_ROWS, EMPTY, 8))
    with pytest.raises(RankError):
        self_dual_obstruction(R)


def test_stack_reduce_with_dual_rows():
    R = QuadraticSpace.from_matrix(PolyMatrix(A_ROWS, EMPTY, 8))
    dual = koszul_dual_matrix(R.matrix)
    reduced = stack_reduce(R.matrix, dual)
    assert reduced.select_columns([1, 4]).is_zero()


def test_osborn_unital_check():
    assert osborn_unital_check([1, -1])
    assert not osborn_unital_check([1, 1])
    with pytest.raises(ZeroRelationError):
        osborn_unital_check([0, 0])


def test_coefficient_sums():
    M = PolyMatrix(A_ROWS + [[1, 1, 0, 0, 0, 0, 0, 0]], EMPTY, 8)
    assert [s.constant_value() for s in coefficient_sums(M)] == [0, 0, 2]


def test_from_matrix_canonicalizes_constants():
    R = QuadraticSpace.from_matrix(PolyMatrix([[2, 0, 0, 0, -2, 0, 0, 0]], EMPTY, 8))
    assert R.matrix == rcf_numeric(PolyMatrix([[1, 0, 0, 0, -1, 0, 0, 0]], EMPTY, 8))
    assert R.to_dict(MonomialOrder(OrderKind.GREVLEX, EMPTY))["basisLabels"][0] == "(x1|-x2)|-x3"

import pytest

from src.algebra import Polynomial
from src.classification import (
    PipelineConfig, check_family, families_for, family_cases, nonassoc_case, obstruction_generators,
    parameter_matrix, relation_matrix, signature_for, signature_matrix, verify_signature_equivalence,
)
from src.classification.nonassociative import normalized_obstruction
from src.errors import UnknownNameError
from src.operads import QuadraticSpace, self_dual_obstruction
from src.storage import Numbering, Verdict

S_CASES = [1, 2, 3, 4, 6, 7, 8, 10, 11, 16, 17, 18, 20, 21]
UNIT_CASES = [5, 9, 12, 13, 14, 15, 19] + list(range(22, 36))

CASE_21_BASIS = [
    "Z3", "Z2", "Z1", "Y2", "Y1", "X1", "Z4^2 + 1", "Y3^2 + 1", "X2^2 + 1", "W1^2 + 1",
]
CASE_18_BASIS = [
    "Z3", "Z2", "Z1", "Y1", "X1",
    "Z4^2 + 1",
    "Y2^2 + Y3^2 - 1",
    "X2*Y2 + X3*Y3",
    "X3^2 + Y3^2 - 1",
    "X2*X3 + Y2*Y3",
    "X2^2 - Y3^2",
    "W1^2 + 1",
    "X3*Y2*Y3 - X2*Y3^2 + X2",
]


def test_family_cases_are_s():
    assert family_cases() == S_CASES


def test_case_21_report():
    report = nonassoc_case(21)
    assert report.verdict is Verdict.SELF_DUAL_FAMILY
    assert report.numbering is Numbering.CONTAINS_1
    assert report.parameter_count == 10
    assert report.groebner.formatted() == CASE_21_BASIS
    assert report.signature_verified is True
    assert report.signature_source == "statement"
    names = [f.name for f in report.families]
    assert names == ["case-21-imaginary-unit", "case-21-independent-signs"]
    assert all(f.verified and f.operad_level for f in report.families)
    assert report.families[0].displayed_matrix is True
    assert report.families[1].displayed_matrix is None


def test_case_21_basis_membership():
    result = nonassoc_case(21, PipelineConfig(verify_families=False)).groebner
    variables = result.order.variables
    assert result.contains(Polynomial.variable("Z3", variables))
    assert result.contains(Polynomial.variable("W1", variables) ** 2 + 1)
    assert not result.contains(Polynomial.variable("W1", variables))
    assert not result.contains(Polynomial.one(variables))


def test_case_18_basis():
    report = nonassoc_case(18, PipelineConfig(strategy="pairs", verify_families=False))
    assert report.verdict is Verdict.SELF_DUAL_FAMILY
    assert report.groebner.formatted() == CASE_18_BASIS
    assert report.to_dict()["gbGreatest"] == CASE_18_BASIS[-1]


def test_case_21_staged_trace_ends_quietly():
    report = nonassoc_case(21, PipelineConfig(strategy="staged", verify_families=False))
    assert report.groebner.formatted() == CASE_21_BASIS
    assert report.groebner.trace[-1].nonzero_s_polynomials == 0


def test_case_21_to_dict():
    data = nonassoc_case(21, PipelineConfig(verify_families=False)).to_dict()
    assert data["caseId"] == 21
    assert data["pivots"] == [1, 3, 5, 7]
    assert data["gbSize"] == 10
    assert data["gbGreatest"] == "W1^2 + 1"
    assert data["verdict"] == "self-dual-family"


@pytest.mark.parametrize("case_id", [36, 50, 64, 70])
def test_subsets_without_column_one_are_rejected(case_id):
    report = nonassoc_case(case_id)
    assert report.verdict is Verdict.STRUCTURALLY_REJECTED
    assert report.numbering is Numbering.ALL
    assert report.groebner is None
    assert report.gb_size is None
    assert report.notes and report.notes[0].startswith("T has the constant entry")


def test_case_18_families_verify():
    R = relation_matrix(18)
    T = self_dual_obstruction(QuadraticSpace(R, canonical=True))
    checks = [check_family(f, R, T) for f in families_for("nonassociative", 18)]
    assert [c.name for c in checks] == ["case-18-rotation", "case-18-reflection"]
    assert all(c.verified and c.operad_level for c in checks)
    assert checks[0].displayed_matrix is True


def test_zero_assignment_does_not_solve_case_1():
    R = relation_matrix(1)
    T = self_dual_obstruction(QuadraticSpace(R, canonical=True))
    zero = T.substitute({name: 0 for name in R.variables.names})
    assert not zero.is_zero()
    assert zero.select_columns([5, 6, 7, 8]).to_strings(_order(R)) == [
        ["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"],
    ]


def _order(R):
    return PipelineConfig().make_order(R.variables)


def test_parameter_matrix_zeros():
    P = parameter_matrix(18)
    assert P.shape == (4, 4)
    # W2, W3, W4, X4, Y4
    assert [P.entry(i, 1) for i in (2, 3, 4)] == [0, 0, 0]
    assert P.entry(4, 2) == 0 and P.entry(4, 3) == 0
    assert P.entry(3, 2).used_variables() == ["X3"]


def test_signatures():
    assert signature_for(1).D == (1, 1, 1, 1)
    assert signature_for(10).E == (-1, -1, 1, 1)
    assert signature_for(7).source == "proof"
    assert signature_for(7).D == signature_for(2).D
    with pytest.raises(UnknownNameError):
        signature_for(5)


def test_signature_matrix_case_1():
    M = signature_matrix(1)
    assert M.entry(1, 1).constant_value() == -1
    assert M.entry(1, 2) == M.entry(2, 1)


def test_case_2_normalized_obstruction_matches_signature():
    R = relation_matrix(2)
    order = _order(R)
    T = self_dual_obstruction(QuadraticSpace(R, canonical=True))
    T2 = normalized_obstruction(T, (1, 2, 3, 5), order)
    assert T2 == signature_matrix(2)


@pytest.mark.parametrize("case_id", [21, pytest.param(2, marks=pytest.mark.slow)])
def test_signature_equivalence(case_id):
    assert verify_signature_equivalence(case_id)


@pytest.mark.slow
def test_case_5_is_unit_ideal():
    report = nonassoc_case(5)
    assert report.verdict is Verdict.UNIT_IDEAL
    assert report.groebner.formatted() == ["1"]
    assert report.parameter_count == 12


@pytest.mark.slow
def test_full_partition():
    reports = [nonassoc_case(case_id) for case_id in range(1, 71)]
    by_verdict = {v: [r.case_id for r in reports if r.verdict is v] for v in Verdict}
    assert by_verdict[Verdict.STRUCTURALLY_REJECTED] == list(range(36, 71))
    assert by_verdict[Verdict.UNIT_IDEAL] == UNIT_CASES
    assert by_verdict[Verdict.SELF_DUAL_FAMILY] == S_CASES
    assert all(r.signature_verified for r in reports if r.case_id in S_CASES)


def test_case_5_starts_from_ten_generators():
    R = relation_matrix(5)
    order = _order(R)
    assert R.variables.names[0] == "A" and len(R.variables) == 12
    generators = obstruction_generators(self_dual_obstruction(QuadraticSpace(R, canonical=True)), order)
    assert len(generators) == 10
    assert all(g.leading_coefficient(order) == 1 for g in generators)

import pytest

from src.classification import (
    PipelineConfig, apply_associativity_conditions, assoc_build_cases, assoc_case,
    assoc_relation_matrix, associativity_matrix,
)
from src.linalg import same_row_space, stack_reduce
from src.storage import Numbering, Verdict

CASE_1_BASIS = [
    "Z3", "Z2", "W3", "W2",
    "Y2^2 + Y3^2 - 1",
    "X2*Y2 + X3*Y3",
    "X3^2 + Y3^2 - 1",
    "X2*X3 + Y2*Y3",
    "X2^2 - Y3^2",
    "X3*Y2*Y3 - X2*Y3^2 + X2",
]
CASE_3_BASIS = ["Z4", "Z2", "Y2", "X2", "Y4^2 + 1", "W2^2 + 1"]

# rows after the associativity conditions, space separated
ASSOC_MATRICES = {
    1: ["1 0 0 0 -1 0 0 0", "0 1 0 0 W2 X2 Y2 Z2", "0 0 1 0 W3 X3 Y3 Z3", "0 0 0 1 0 0 0 -1"],
    2: ["1 0 0 0 0 X1 Y1 Z1", "0 1 W2 0 0 X2 Y2 Z2", "0 0 0 1 0 0 0 -1", "0 0 0 0 1 X1 Y1 Z1"],
    3: ["1 0 0 0 -1 0 0 0", "0 1 W2 0 X2 0 Y2 Z2", "0 0 0 1 0 0 0 -1", "0 0 0 0 0 1 Y4 Z4"],
    4: ["1 0 0 0 -1 0 0 0", "0 1 W2 0 X2 Y2 0 Z2", "0 0 0 1 0 0 0 -1", "0 0 0 0 0 0 1 Z4"],
    5: ["1 0 0 0 -1 0 0 0", "0 1 W2 0 X2 Y2 Z2 0", "0 0 0 1 0 0 0 0", "0 0 0 0 0 0 0 1"],
    6: ["1 0 0 0 0 X1 Y1 Z1", "0 0 1 0 0 X2 Y2 Z2", "0 0 0 1 0 0 0 -1", "0 0 0 0 1 X1 Y1 Z1"],
    7: ["1 0 0 0 -1 0 0 0", "0 0 1 0 X2 0 Y2 Z2", "0 0 0 1 0 0 0 -1", "0 0 0 0 0 1 Y4 Z4"],
    8: ["1 0 0 0 -1 0 0 0", "0 0 1 0 X2 Y2 0 Z2", "0 0 0 1 0 0 0 -1", "0 0 0 0 0 0 1 Z4"],
    9: ["1 0 0 0 -1 0 0 0", "0 0 1 0 X2 Y2 Z2 0", "0 0 0 1 0 0 0 0", "0 0 0 0 0 0 0 1"],
    10: ["1 0 0 0 0 0 Y1 Z1", "0 0 0 1 0 0 0 -1", "0 0 0 0 1 0 Y1 Z1", "0 0 0 0 0 1 Y4 Z4"],
    11: ["1 0 0 0 0 Y1 0 Z1", "0 0 0 1 0 0 0 -1", "0 0 0 0 1 Y1 0 Z1", "0 0 0 0 0 0 1 Z4"],
    12: ["1 0 0 0 0 Y1 Z1 0", "0 0 0 1 0 0 0 0", "0 0 0 0 1 Y1 Z1 0", "0 0 0 0 0 0 0 1"],
    13: ["1 0 0 0 -1 0 0 0", "0 0 0 1 0 0 0 -1", "0 0 0 0 0 1 0 Z3", "0 0 0 0 0 0 1 Z4"],
    14: ["1 0 0 0 -1 0 0 0", "0 0 0 1 0 0 0 0", "0 0 0 0 0 1 Z3 0", "0 0 0 0 0 0 0 1"],
    15: ["1 0 0 0 -1 0 0 0", "0 0 0 1 0 0 0 0", "0 0 0 0 0 0 1 0", "0 0 0 0 0 0 0 1"],
}


def _constants(assignments):
    return {name: value.constant_value() for name, value in assignments.items()}


def test_fifteen_patterns():
    cases = assoc_build_cases()
    assert len(cases) == 15
    assert all({1, 4} <= set(s.columns) for s, _ in cases)
    subset, R = cases[0]
    assert subset.columns == (1, 2, 3, 4)
    assert len(R.variables) == 16


def test_case_1_conditions():
    _, R = assoc_build_cases()[0]
    result = apply_associativity_conditions(R)
    assert result.constraint_count == 8
    assert _constants(result.assignments) == {
        "W1": -1, "X1": 0, "Y1": 0, "Z1": 0, "W4": 0, "X4": 0, "Y4": 0, "Z4": -1,
    }
    assert result.matrix.variables.names == ("W2", "W3", "X2", "X3", "Y2", "Y3", "Z2", "Z3")
    assert stack_reduce(result.matrix, associativity_matrix(result.matrix.variables)).is_zero()


def test_case_2_last_row_is_tied_to_first():
    R = assoc_relation_matrix(2)
    assert R.to_strings(PipelineConfig().make_order(R.variables))[3] == [
        "0", "0", "0", "0", "1", "X1", "Y1", "Z1",
    ]


def test_case_3_conditions():
    _, R = assoc_build_cases()[2]
    result = apply_associativity_conditions(R)
    assert _constants(result.assignments) == {
        "W1": 0, "X1": -1, "Y1": 0, "Z1": 0, "X3": 0, "Y3": 0, "Z3": -1,
    }
    assert set(result.matrix.variables.names) == {"W2", "X2", "Y2", "Z2", "Y4", "Z4"}


@pytest.mark.parametrize("case_id", sorted(ASSOC_MATRICES))
def test_matrix_after_conditions(case_id):
    R = assoc_relation_matrix(case_id)
    rows = R.to_strings(PipelineConfig().make_order(R.variables))
    assert [" ".join(row) for row in rows] == ASSOC_MATRICES[case_id]
    assert same_row_space(R, R.stack(associativity_matrix(R.variables)))


def test_case_15_becomes_constant():
    R = assoc_relation_matrix(15)
    assert len(R.variables) == 0
    assert R.is_constant()
    assert same_row_space(R, R.stack(associativity_matrix(R.variables)))
    report = assoc_case(15)
    assert report.notes[0] == "0 parameters after associativity conditions"


def test_case_1_report():
    report = assoc_case(1)
    assert report.numbering is Numbering.CONTAINS_1_4
    assert report.verdict is Verdict.SELF_DUAL_FAMILY
    assert report.parameter_count == 16
    assert report.notes[0] == "8 parameters after associativity conditions"
    assert report.groebner.formatted() == CASE_1_BASIS
    assert [f.name for f in report.families] == ["assoc-1-rotation", "assoc-1-reflection"]
    assert all(f.verified and f.operad_level for f in report.families)
    assert report.families[0].displayed_matrix is True


def test_case_1_staged_agrees():
    report = assoc_case(1, PipelineConfig(strategy="staged", verify_families=False))
    assert report.groebner.formatted() == CASE_1_BASIS


def test_case_3_report():
    report = assoc_case(3)
    assert report.verdict is Verdict.SELF_DUAL_FAMILY
    assert report.groebner.formatted() == CASE_3_BASIS
    assert report.notes[0] == "6 parameters after associativity conditions"
    family = report.families[0]
    assert family.name == "assoc-3-imaginary-units"
    assert family.verified and family.operad_level and family.displayed_matrix


@pytest.mark.parametrize("case_id", [6, 11, 15])
def test_structural_rejections(case_id):
    report = assoc_case(case_id)
    assert report.verdict is Verdict.STRUCTURALLY_REJECTED
    assert report.groebner is None
    assert report.notes[1].startswith("T has the constant entry")


@pytest.mark.slow
def test_full_partition():
    verdicts = {case_id: assoc_case(case_id).verdict for case_id in range(1, 16)}
    assert [c for c, v in verdicts.items() if v is Verdict.SELF_DUAL_FAMILY] == [1, 3]
    assert [c for c, v in verdicts.items() if v is Verdict.UNIT_IDEAL] == [2, 4, 5]
    assert [c for c, v in verdicts.items() if v is Verdict.STRUCTURALLY_REJECTED] == list(range(6, 16))

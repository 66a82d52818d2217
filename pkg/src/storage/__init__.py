"""
Report models and file formats
"""
from .models import (
    Verdict, Numbering, Mode, FamilyCheck, CaseReport, OneOperationSolution,
    ClassificationSummary,
)
from .file_formats import read_ideal_file, read_matrix_file, matrix_to_dict, write_json

__all__ = [
    "Verdict",
    "Numbering",
    "Mode",
    "FamilyCheck",
    "CaseReport",
    "OneOperationSolution",
    "ClassificationSummary",
    "read_ideal_file",
    "read_matrix_file",
    "matrix_to_dict",
    "write_json",
]

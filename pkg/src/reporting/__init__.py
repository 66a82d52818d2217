"""
Text tables and JSON reports
"""
from .tables import (
    render_case_table, render_summary_footer, render_one_operation, render_classification,
    render_matrix, render_dual, render_groebner, render_catalog_entry, render_dual_checks,
)
from .summary import to_json

__all__ = [
    "render_case_table", "render_summary_footer", "render_one_operation", "render_classification",
    "render_matrix", "render_dual", "render_groebner", "render_catalog_entry", "render_dual_checks",
    "to_json",
]

"""
Gröbner bases: staged and pair-queue Buchberger, ideal queries
"""
from .basis import (
    StageRecord, GroebnerResult, minimalize, interreduce, reduced_basis, sort_ascending,
)
from .buchberger import (
    STRATEGIES, s_polynomial, self_reduce, buchberger_staged, buchberger, groebner_basis,
)
from .ideals import is_unit_ideal, contains, ideals_equal

__all__ = [
    "StageRecord", "GroebnerResult", "minimalize", "interreduce", "reduced_basis", "sort_ascending",
    "STRATEGIES", "s_polynomial", "self_reduce", "buchberger_staged", "buchberger", "groebner_basis",
    "is_unit_ideal", "contains", "ideals_equal",
]

"""
Pivot subsets in lex order and the three case numberings.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from src.errors import UnknownNameError
from src.linalg import parameter_count
from src.storage import Numbering


@dataclass(frozen=True)
class SubsetChoice:
    columns: Tuple[int, ...]
    case_number: int
    numbering: Numbering = Numbering.ALL

    @property
    def parameter_count(self) -> int:
        return parameter_count(self.columns, 8, len(self.columns))


def enumerate_subsets(r: int = 4, n: int = 8, must_contain: Optional[Iterable[int]] = None) -> List[SubsetChoice]:
    """
    All r-subsets of {1..n} in lex order (compare at the least differing
    index), optionally restricted to those containing `must_contain`, and
    numbered from 1 within the result.
    """
    required = set(must_contain or ())
    if required == {1}:
        numbering = Numbering.CONTAINS_1
    elif required == {1, 4}:
        numbering = Numbering.CONTAINS_1_4
    else:
        numbering = Numbering.ALL
    chosen = [c for c in combinations(range(1, n + 1), r) if required <= set(c)]
    return [SubsetChoice(c, k, numbering) for k, c in enumerate(chosen, 1)]


def subset_for(case_id: int, must_contain: Optional[Iterable[int]] = None) -> SubsetChoice:
    subsets = enumerate_subsets(4, 8, must_contain)
    if not 1 <= case_id <= len(subsets):
        raise UnknownNameError(f"case {case_id} outside 1..{len(subsets)}")
    return subsets[case_id - 1]

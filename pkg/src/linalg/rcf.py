"""
Row canonical forms: exact RCF of constant matrices and parametric RCF
patterns with fresh parameter variables.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from src.algebra import Polynomial, VariableSet
from src.errors import InvalidPatternError, NonConstantEntryError
from .matrix import PolyMatrix

PARAM_LETTERS = "WXYZ"


@dataclass(frozen=True)
class PivotPattern:
    """Pivot columns (1-based, increasing) plus slots forced to zero"""
    pivot_columns: Tuple[int, ...]
    zeroed_slots: FrozenSet[Tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "pivot_columns", tuple(self.pivot_columns))
        object.__setattr__(self, "zeroed_slots", frozenset(self.zeroed_slots))

    @property
    def rank(self) -> int:
        return len(self.pivot_columns)

    def validate(self, ncols: int):
        pivots = self.pivot_columns
        if any(b <= a for a, b in zip(pivots, pivots[1:])):
            raise InvalidPatternError(f"pivot columns {pivots} are not strictly increasing")
        if pivots and (pivots[0] < 1 or pivots[-1] > ncols):
            raise InvalidPatternError(f"pivot columns {pivots} outside 1..{ncols}")
        for row, col in self.zeroed_slots:
            if col in pivots:
                raise InvalidPatternError(f"zeroed slot ({row},{col}) is in a pivot column")
            if not 1 <= row <= len(pivots):
                raise InvalidPatternError(f"zeroed slot ({row},{col}) outside the pattern rows")

    def free_slots(self, ncols: int) -> List[Tuple[int, int]]:
        """(row, col) positions that carry a parameter, row-major"""
        pivots = set(self.pivot_columns)
        slots = []
        for i, j in enumerate(self.pivot_columns, 1):
            for c in range(j + 1, ncols + 1):
                if c not in pivots and (i, c) not in self.zeroed_slots:
                    slots.append((i, c))
        return slots


def parameter_count(columns: Sequence[int], n: int = 8, r: Optional[int] = None) -> int:
    """Free entries of a generic RCF: sum over rows of (n - j_i) - (r - i)"""
    r = len(columns) if r is None else r
    return sum((n - j) - (r - i) for i, j in enumerate(columns, 1))


def parameter_name(pattern: PivotPattern, ncols: int, row: int, col: int) -> str:
    """W/X/Y/Z by position among the non-pivot columns, subscript = row"""
    nonpivots = [c for c in range(1, ncols + 1) if c not in pattern.pivot_columns]
    k = nonpivots.index(col)
    if k >= len(PARAM_LETTERS):
        raise InvalidPatternError("wxyz naming needs at most four non-pivot columns")
    return f"{PARAM_LETTERS[k]}{row}"


def _letters(count: int) -> List[str]:
    names = []
    for k in range(count):
        name = ""
        k += 1
        while k:
            k, rem = divmod(k - 1, 26)
            name = chr(ord("A") + rem) + name
        names.append(name)
    return names


def build_parametric_rcf(
    pattern: PivotPattern, ncols: int = 8, scheme: str = "wxyz"
) -> Tuple[PolyMatrix, Dict[Tuple[int, int], str]]:
    """
    RCF-shaped matrix with a fresh parameter in every free slot.

    Args:
        pattern: pivot columns and zeroed slots
        ncols: column count
        scheme: "wxyz" (column-major W1..Z4) or "letters" (A, B, ... row-major)

    Returns:
        (matrix, {(row, col): parameter name})
    """
    pattern.validate(ncols)
    slots = pattern.free_slots(ncols)
    if scheme == "wxyz":
        names = {slot: parameter_name(pattern, ncols, *slot) for slot in slots}
        ordered = sorted(names.values(), key=lambda n: (n[0], int(n[1:])))
    elif scheme == "letters":
        ordered = _letters(len(slots))
        names = dict(zip(slots, ordered))
    else:
        raise InvalidPatternError(f"unknown naming scheme '{scheme}'")

    variables = VariableSet(tuple(ordered))
    rows = []
    for i, j in enumerate(pattern.pivot_columns, 1):
        row: List = [0] * ncols
        row[j - 1] = 1
        for c in range(1, ncols + 1):
            if (i, c) in names:
                row[c - 1] = Polynomial.variable(names[(i, c)], variables)
        rows.append(row)
    return PolyMatrix(rows, variables, ncols), names


def rcf_numeric(M: PolyMatrix) -> PolyMatrix:
    """
    Unique reduced row echelon form of a constant matrix; zero rows dropped,
    so the row count is the rank.
    """
    if not M.is_constant():
        raise NonConstantEntryError("rcf_numeric needs constant entries")
    rows = [[e.constant_value() for e in row] for row in M.rows]
    n = M.ncols
    pivot_row = 0
    for col in range(n):
        sel = next((r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None)
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        p = rows[pivot_row][col]
        rows[pivot_row] = [x / p for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return PolyMatrix(rows[:pivot_row], M.variables, n)


def numeric_rank(M: PolyMatrix) -> int:
    return rcf_numeric(M).nrows


def same_row_space(a: PolyMatrix, b: PolyMatrix) -> bool:
    """Row-space equality of constant matrices"""
    ra, rb = rcf_numeric(a), rcf_numeric(b)
    return ra.ncols == rb.ncols and [[e.constant_value() for e in r] for r in ra.rows] == [
        [e.constant_value() for e in r] for r in rb.rows
    ]


def constant_matrix(rows: Sequence[Sequence[Fraction]], ncols: int, variables: Optional[VariableSet] = None) -> PolyMatrix:
    return PolyMatrix(rows, variables or VariableSet(()), ncols)

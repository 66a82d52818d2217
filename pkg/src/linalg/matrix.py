"""
Matrices with polynomial entries and the division-free elimination steps
used by the duality computation.

Column numbers in the public functions are 1-based.
"""
from fractions import Fraction
from typing import Callable, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple, Union

from loguru import logger

from src.algebra import MonomialOrder, Polynomial, VariableSet, format_polynomial, parse_polynomial
from src.errors import DimensionMismatchError, PivotStructureError

Entry = Union[Polynomial, int, Fraction, str]


class PolyMatrix:
    """Immutable r x n matrix of polynomials over one VariableSet"""
    __slots__ = ("rows", "ncols", "variables")

    def __init__(self, rows: Sequence[Sequence[Entry]], variables: VariableSet, ncols: Optional[int] = None):
        built = []
        for row in rows:
            built.append(tuple(_as_poly(e, variables) for e in row))
        if ncols is None:
            if not built:
                raise DimensionMismatchError("column count required for an empty matrix")
            ncols = len(built[0])
        for row in built:
            if len(row) != ncols:
                raise DimensionMismatchError(f"row of length {len(row)} in a {ncols}-column matrix")
        self.rows: Tuple[Tuple[Polynomial, ...], ...] = tuple(built)
        self.ncols = ncols
        self.variables = variables

    @classmethod
    def zeros(cls, nrows: int, ncols: int, variables: VariableSet) -> "PolyMatrix":
        return cls([[0] * ncols for _ in range(nrows)], variables, ncols)

    @classmethod
    def identity(cls, n: int, variables: VariableSet) -> "PolyMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], variables, n)

    @classmethod
    def diagonal(cls, values: Sequence[Entry], variables: VariableSet) -> "PolyMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], variables, n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx: Tuple[int, int]) -> Polynomial:
        """0-based (row, col) access"""
        i, j = idx
        return self.rows[i][j]

    def entry(self, row: int, col: int) -> Polynomial:
        """1-based access"""
        return self.rows[row - 1][col - 1]

    def entries(self) -> Iterator[Polynomial]:
        for row in self.rows:
            yield from row

    def column(self, j: int) -> List[Polynomial]:
        return [row[j] for row in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self):
        return hash((self.ncols, self.rows))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def is_constant(self) -> bool:
        return all(e.is_constant() for e in self.entries())

    def constant_entries(self) -> List[Tuple[int, int, Fraction]]:
        """Nonzero constant entries, 1-based"""
        out = []
        for i, row in enumerate(self.rows, 1):
            for j, e in enumerate(row, 1):
                if not e.is_zero() and e.is_constant():
                    out.append((i, j, e.constant_value()))
        return out

    def nonzero_entries(self) -> List[Polynomial]:
        return [e for e in self.entries() if not e.is_zero()]

    def map(self, fn: Callable[[Polynomial], Polynomial], variables: Optional[VariableSet] = None) -> "PolyMatrix":
        variables = variables if variables is not None else self.variables
        return PolyMatrix([[fn(e) for e in row] for row in self.rows], variables, self.ncols)

    def substitute(self, assignments: Mapping[str, Polynomial], target: Optional[VariableSet] = None) -> "PolyMatrix":
        target = target if target is not None else self.variables
        return self.map(lambda e: e.substitute(assignments, target), target)

    def in_ring(self, variables: VariableSet) -> "PolyMatrix":
        return self.map(lambda e: e.in_ring(variables), variables)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([list(col) for col in zip(*self.rows)], self.variables, self.nrows)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        zero = Polynomial.zero(self.variables)
        out = []
        for row in self.rows:
            new_row = []
            for j in range(other.ncols):
                acc = zero
                for k, a in enumerate(row):
                    b = other.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return PolyMatrix(out, self.variables, other.ncols)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_shape(other)
        return PolyMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            self.variables, self.ncols,
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_shape(other)
        return PolyMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            self.variables, self.ncols,
        )

    def __neg__(self) -> "PolyMatrix":
        return self.map(lambda e: -e)

    def _check_shape(self, other: "PolyMatrix"):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape {self.shape} vs {other.shape}")

    def stack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.ncols:
            raise DimensionMismatchError(f"cannot stack {self.ncols} over {other.ncols} columns")
        return PolyMatrix(list(self.rows) + list(other.rows), self.variables, self.ncols)

    def select_columns(self, cols: Sequence[int]) -> "PolyMatrix":
        """Submatrix on the given 1-based columns"""
        return PolyMatrix([[row[c - 1] for c in cols] for row in self.rows], self.variables, len(cols))

    def to_strings(self, order: MonomialOrder) -> List[List[str]]:
        return [[format_polynomial(e, order) for e in row] for row in self.rows]

    def to_text(self, order: MonomialOrder) -> str:
        """One row per line, entries separated by commas"""
        return "\n".join(", ".join(row) for row in self.to_strings(order))

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]], variables: VariableSet, ncols: Optional[int] = None) -> "PolyMatrix":
        return cls([[parse_polynomial(str(e), variables) for e in row] for row in rows], variables, ncols)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.nrows}x{self.ncols})"


def _as_poly(e: Entry, variables: VariableSet) -> Polynomial:
    if isinstance(e, Polynomial):
        return e if e.variables == variables else e.in_ring(variables)
    if isinstance(e, str):
        return parse_polynomial(e, variables)
    return Polynomial.constant(e, variables)


def pivot_columns(M: PolyMatrix) -> List[int]:
    """
    1-based pivot column of each row: the first nonzero entry, which must be
    the constant 1 or -1.

    Raises:
        PivotStructureError: zero row, non-constant or non-unit pivot, pivots
            not strictly increasing
    """
    pivots = []
    for i, row in enumerate(M.rows, 1):
        j = next((j for j, e in enumerate(row, 1) if not e.is_zero()), None)
        if j is None:
            raise PivotStructureError(f"row {i} is zero")
        e = row[j - 1]
        if not e.is_constant() or abs(e.constant_value()) != 1:
            raise PivotStructureError(f"row {i}: pivot in column {j} is not +-1")
        if pivots and j <= pivots[-1]:
            raise PivotStructureError(f"row {i}: pivot columns are not strictly increasing")
        pivots.append(j)
    return pivots


def _check_rcf_columns(M: PolyMatrix, pivots: Sequence[int]):
    for i, j in enumerate(pivots):
        for k, row in enumerate(M.rows):
            if k != i and not row[j - 1].is_zero():
                raise PivotStructureError(f"column {j} has a nonzero entry outside its pivot row")


def negate_columns(M: PolyMatrix, cols: Iterable[int]) -> PolyMatrix:
    """Multiply the given 1-based columns by -1"""
    flip: Set[int] = {c - 1 for c in cols}
    return PolyMatrix(
        [[-e if j in flip else e for j, e in enumerate(row)] for row in M.rows],
        M.variables, M.ncols,
    )


def fix_leading_signs(M: PolyMatrix, pivots: Sequence[int]) -> PolyMatrix:
    """Multiply by -1 every row whose pivot entry is -1"""
    if len(pivots) != M.nrows:
        raise DimensionMismatchError(f"{len(pivots)} pivots for {M.nrows} rows")
    rows = []
    for i, (row, j) in enumerate(zip(M.rows, pivots), 1):
        p = row[j - 1]
        if not p.is_constant() or abs(p.constant_value()) != 1:
            raise PivotStructureError(f"row {i}: pivot in column {j} is not +-1")
        rows.append([-e for e in row] if p.constant_value() == -1 else list(row))
    return PolyMatrix(rows, M.variables, M.ncols)


def structured_nullspace(M: PolyMatrix, pivots: Sequence[int]) -> PolyMatrix:
    """
    Nullspace basis of an RCF matrix with unit pivots.

    One row per free column f (ascending): x_f = 1, the other free entries 0,
    and x_{pivot_i} = -M[i][f]. No division occurs.
    """
    n = M.ncols
    for i, j in enumerate(pivots):
        if M.rows[i][j - 1] != 1:
            raise PivotStructureError(f"row {i + 1}: pivot in column {j} is not 1")
    _check_rcf_columns(M, pivots)
    pivot_set = set(pivots)
    free = [c for c in range(1, n + 1) if c not in pivot_set]
    zero = Polynomial.zero(M.variables)
    one = Polynomial.one(M.variables)
    rows = []
    for f in free:
        x = [zero] * n
        x[f - 1] = one
        for i, j in enumerate(pivots):
            x[j - 1] = -M.rows[i][f - 1]
        rows.append(x)
    return PolyMatrix(rows, M.variables, n)


def stack_reduce(upper: PolyMatrix, lower: PolyMatrix, pivots: Optional[Sequence[int]] = None) -> PolyMatrix:
    """
    Eliminate the pivot columns of `upper` from every row of `lower`
    by subtracting multiples of upper's pivot rows.
    """
    if upper.ncols != lower.ncols:
        raise DimensionMismatchError(f"{upper.ncols} vs {lower.ncols} columns")
    if upper.variables != lower.variables:
        lower = lower.in_ring(upper.variables)
    pivots = list(pivots) if pivots is not None else pivot_columns(upper)
    for i, j in enumerate(pivots):
        if upper.rows[i][j - 1] != 1:
            raise PivotStructureError(f"upper row {i + 1}: pivot in column {j} is not 1")
    out = []
    for row in lower.rows:
        row = list(row)
        for i, j in enumerate(pivots):
            c = row[j - 1]
            if c.is_zero():
                continue
            urow = upper.rows[i]
            row = [a - c * b if b else a for a, b in zip(row, urow)]
        out.append(row)
    return PolyMatrix(out, upper.variables, upper.ncols)


def monic_diagonal_normalize(T: PolyMatrix, order: MonomialOrder) -> Tuple[PolyMatrix, List[int]]:
    """
    Scale each row of a square matrix so its diagonal entry is monic.

    Returns:
        (normalized matrix, 1-based indices of rows left unscaled because
        their diagonal entry is zero)
    """
    if T.nrows != T.ncols:
        raise DimensionMismatchError(f"matrix {T.shape} is not square")
    rows = []
    skipped = []
    for i, row in enumerate(T.rows):
        d = row[i]
        if d.is_zero():
            logger.warning(f"[Linalg] row {i + 1} has a zero diagonal entry, left as is")
            skipped.append(i + 1)
            rows.append(list(row))
            continue
        lc = d.leading_coefficient(order)
        rows.append([e.scale(1 / lc) for e in row])
    return PolyMatrix(rows, T.variables, T.ncols), skipped

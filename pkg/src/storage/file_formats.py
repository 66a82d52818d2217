"""
Ideal and matrix files.

Ideal file (JSON):  {"variables": [...], "order": "grevlex", "ranking": [...], "generators": [...]}
Matrix file (JSON): {"cols": 8, "rows": [["1", "0", "A", ...], ...], "variables": [...]}
Matrix file (text): one row per line, entries separated by commas
"""
import json
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from src.algebra import MonomialOrder, OrderKind, Polynomial, VariableSet, parse_polynomial
from src.errors import InputFormatError
from src.linalg import PolyMatrix

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def _load_json(path: Path) -> Dict[str, Any]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputFormatError(f"file not found: {path}") from None
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None
    if not isinstance(data, dict):
        raise InputFormatError(f"{path}: expected a JSON object")
    return data


def _string_list(data: Dict[str, Any], key: str, path: Path, required: bool = True) -> Optional[List[str]]:
    value = data.get(key)
    if value is None:
        if required:
            raise InputFormatError(f"{path}: missing field '{key}'")
        return None
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise InputFormatError(f"{path}: field '{key}' must be a list of strings")
    return value


def read_ideal_file(
    path: Path,
    order_kind: Optional[str] = None,
    ranking: Optional[Sequence[str]] = None,
) -> Tuple[List[Polynomial], MonomialOrder]:
    """
    Load generators and the monomial order; `order_kind` / `ranking`
    override the file's values.
    """
    data = _load_json(path)
    names = _string_list(data, "variables", path)
    generators = _string_list(data, "generators", path)
    try:
        variables = VariableSet(tuple(names))
        kind = OrderKind(order_kind or data.get("order", "grevlex"))
        ranking = list(ranking) if ranking else _string_list(data, "ranking", path, required=False)
        order = MonomialOrder(kind, variables, tuple(ranking or ()))
    except ValueError as e:
        raise InputFormatError(f"{path}: {e}") from None
    polys = [parse_polynomial(g, variables) for g in generators]
    logger.debug(f"[Files] {path}: {len(polys)} generators over {len(variables)} variables")
    return polys, order


def _infer_variables(cells: Sequence[str]) -> VariableSet:
    seen: List[str] = []
    for cell in cells:
        for name in _IDENT_RE.findall(cell):
            if name not in seen:
                seen.append(name)
    return VariableSet(tuple(sorted(seen)))


def read_matrix_file(path: Path) -> PolyMatrix:
    """JSON ({cols, rows[, variables]}) or comma-separated text, by suffix"""
    path = Path(path)
    if path.suffix.lower() == ".json":
        data = _load_json(path)
        rows = data.get("rows")
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise InputFormatError(f"{path}: field 'rows' must be a list of lists")
        rows = [[str(e) for e in r] for r in rows]
        ncols = data.get("cols", len(rows[0]) if rows else None)
        if ncols is not None and not isinstance(ncols, int):
            raise InputFormatError(f"{path}: field 'cols' must be an integer")
        names = _string_list(data, "variables", path, required=False)
    else:
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise InputFormatError(f"file not found: {path}") from None
        rows = [[cell.strip() for cell in line.split(",")] for line in text.splitlines() if line.strip()]
        ncols = len(rows[0]) if rows else None
        names = None
    if ncols is None:
        raise InputFormatError(f"{path}: empty matrix without a column count")
    variables = VariableSet(tuple(names)) if names else _infer_variables([c for r in rows for c in r])
    try:
        return PolyMatrix.from_strings(rows, variables, ncols)
    except InputFormatError:
        raise
    except ValueError as e:
        raise InputFormatError(f"{path}: {e}") from None


def matrix_to_dict(M: PolyMatrix, order: MonomialOrder, labels: Optional[Sequence[str]] = None) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "cols": M.ncols,
        "rows": M.to_strings(order),
        "variables": list(M.variables.names),
    }
    if labels is not None:
        data["basisLabels"] = list(labels)
    return data


def write_json(data: Any, path: Path, indent: int = 2) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=indent, sort_keys=True) + "\n", encoding="utf-8")
    return path

"""
Named operads and dual-pair verification.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

from loguru import logger

from config.operads_catalog import OPERADS_CATALOG
from src.algebra import MonomialOrder, OrderKind, VariableSet
from src.errors import UnknownNameError
from src.linalg import PolyMatrix, rcf_numeric
from .quadratic import BASIS_LABELS, QuadraticSpace, coefficient_sums, loday_dual

_EMPTY = VariableSet(())


@dataclass
class NamedOperadEntry:
    name: str
    relations: QuadraticSpace
    expected_dual_name: Optional[str] = None
    description: str = ""

    @property
    def rank(self) -> int:
        return self.relations.rank

    def unital_sums(self) -> List[Fraction]:
        return [s.constant_value() for s in coefficient_sums(self.relations.matrix)]

    def to_dict(self) -> Dict[str, Any]:
        order = MonomialOrder(OrderKind.GREVLEX, _EMPTY)
        return {
            "name": self.name,
            "description": self.description,
            "rank": self.rank,
            "expectedDual": self.expected_dual_name,
            "relations": self.relations.to_dict(order),
            "coefficientSums": [str(s) for s in self.unital_sums()],
        }


@dataclass
class DualPairCheck:
    first: str
    second: str
    verified: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"first": self.first, "second": self.second, "verified": self.verified}


def relation_rows(relations: List[Dict[str, int]]) -> List[List[Fraction]]:
    """Label maps -> coefficient rows in the ordered basis"""
    rows = []
    for rel in relations:
        unknown = set(rel) - set(BASIS_LABELS)
        if unknown:
            raise UnknownNameError(f"unknown basis labels {sorted(unknown)}")
        rows.append([Fraction(rel.get(label, 0)) for label in BASIS_LABELS])
    return rows


def catalog_names() -> List[str]:
    return list(OPERADS_CATALOG)


def catalog(name: str) -> NamedOperadEntry:
    """Catalog entry with its relations canonicalized to RCF"""
    data = OPERADS_CATALOG.get(name)
    if data is None:
        raise UnknownNameError(f"unknown operad '{name}' (known: {', '.join(catalog_names())})")
    matrix = PolyMatrix(relation_rows(data["relations"]), _EMPTY, len(BASIS_LABELS))
    space = QuadraticSpace(rcf_numeric(matrix), canonical=True)
    return NamedOperadEntry(name, space, data.get("dual"), data.get("description", ""))


def check_dual_pair(first: str, second: str) -> bool:
    """True iff the dual of `first` has the row space of `second`"""
    a, b = catalog(first), catalog(second)
    verified = loday_dual(a.relations).same_space(b.relations)
    logger.debug(f"[Catalog] dual({first}) == {second}: {verified}")
    return verified


def check_all_duals() -> List[DualPairCheck]:
    """Both directions of every pairing in the catalog"""
    checks = []
    for name in catalog_names():
        dual = OPERADS_CATALOG[name].get("dual")
        if dual:
            checks.append(DualPairCheck(name, dual, check_dual_pair(name, dual)))
    failed = [c for c in checks if not c.verified]
    if failed:
        logger.warning(f"[Catalog] {len(failed)} dual pairings failed")
    return checks

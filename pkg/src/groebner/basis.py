"""
Gröbner basis results, stage records and reduced-basis post-processing.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from src.algebra import (
    MonomialOrder, OrderKind, Polynomial, format_polynomial, monomial_divides,
    normal_form,
)


@dataclass(frozen=True)
class StageRecord:
    """One round of the staged algorithm"""
    stage: int
    elements_before_self_reduce: int
    eliminated_by_self_reduce: int
    surviving_generators: int
    nonzero_s_polynomials: int

    def to_dict(self) -> Dict[str, int]:
        return {
            "stage": self.stage,
            "elementsBeforeSelfReduce": self.elements_before_self_reduce,
            "eliminatedBySelfReduce": self.eliminated_by_self_reduce,
            "survivingGenerators": self.surviving_generators,
            "nonzeroSPolynomials": self.nonzero_s_polynomials,
        }


@dataclass
class GroebnerResult:
    """Reduced Gröbner basis, sorted ascending, with the stage trace when available"""
    basis: List[Polynomial]
    order: MonomialOrder
    trace: List[StageRecord] = field(default_factory=list)
    strategy: str = "staged"

    @property
    def size(self) -> int:
        return len(self.basis)

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def greatest(self) -> Optional[Polynomial]:
        """Greatest element under the computation order"""
        if not self.basis:
            return None
        return max(self.basis, key=lambda f: f.sort_key(self.order))

    def greatest_lex(self) -> Optional[Polynomial]:
        """Greatest element when the basis is compared under lex"""
        if not self.basis:
            return None
        lex = MonomialOrder(OrderKind.LEX, self.order.variables, self.order.ranking)
        return max(self.basis, key=lambda f: f.sort_key(lex))

    def sorted_lex(self) -> List[Polynomial]:
        lex = MonomialOrder(OrderKind.LEX, self.order.variables, self.order.ranking)
        return sorted(self.basis, key=lambda f: f.sort_key(lex))

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.basis, self.order).is_zero()

    def formatted(self) -> List[str]:
        return [format_polynomial(g, self.order) for g in self.basis]

    def to_dict(self) -> Dict[str, Any]:
        greatest = self.greatest()
        greatest_lex = self.greatest_lex()
        return {
            "variables": list(self.order.variables.names),
            "order": self.order.kind.value,
            "ranking": list(self.order.ranking),
            "generators": self.formatted(),
            "size": self.size,
            "greatest": format_polynomial(greatest, self.order) if greatest is not None else None,
            "greatestLex": format_polynomial(greatest_lex, self.order) if greatest_lex is not None else None,
            "strategy": self.strategy,
            "trace": [r.to_dict() for r in self.trace],
        }


def sort_ascending(polys: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    return sorted(polys, key=lambda f: f.sort_key(order))


def minimalize(G: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Drop elements whose leading monomial is divisible by another's"""
    kept: List[Polynomial] = []
    kept_lms = []
    for f in sort_ascending(G, order):
        lm = f.leading_monomial(order)
        if all(not monomial_divides(g, lm) for g in kept_lms):
            kept.append(f)
            kept_lms.append(lm)
    return kept


def interreduce(G: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Reduced basis from a minimal one: each element reduced by the others and made monic"""
    out = []
    for i, g in enumerate(G):
        r = normal_form(g, list(G[:i]) + list(G[i + 1:]), order)
        out.append(r.monic(order))
    return sort_ascending(out, order)


def reduced_basis(G: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Minimalize, inter-reduce and make monic; {1} if a constant is present"""
    nonzero = [g for g in G if not g.is_zero()]
    if not nonzero:
        return []
    for g in nonzero:
        if g.is_constant():
            return [Polynomial.one(g.variables)]
    return interreduce(minimalize(nonzero, order), order)

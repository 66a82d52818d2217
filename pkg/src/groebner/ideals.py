"""
Ideal-level queries built on reduced Gröbner bases.
"""
from typing import Optional, Sequence

from src.algebra import MonomialOrder, Polynomial, normal_form
from src.errors import VariableSetMismatchError
from .basis import GroebnerResult
from .buchberger import groebner_basis


def is_unit_ideal(
    generators: Sequence[Polynomial], order: MonomialOrder, strategy: Optional[str] = None
) -> bool:
    return groebner_basis(generators, order, strategy).is_unit()


def contains(result: GroebnerResult, f: Polynomial) -> bool:
    """Membership test: f reduces to zero modulo the reduced basis"""
    return normal_form(f, result.basis, result.order).is_zero()


def ideals_equal(
    first: Sequence[Polynomial],
    second: Sequence[Polynomial],
    order: MonomialOrder,
    strategy: Optional[str] = None,
) -> bool:
    """Equal iff the reduced Gröbner bases coincide"""
    rings = {f.variables for f in list(first) + list(second)}
    if len(rings) > 1:
        raise VariableSetMismatchError("ideals live in different rings")
    a = groebner_basis(first, order, strategy).basis
    b = groebner_basis(second, order, strategy).basis
    return a == b

"""
Multivariate division with full tail reduction.
"""
import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.errors import ZeroPolynomialError
from .monomials import Monomial, MonomialOrder, monomial_div, monomial_divides, monomial_mul
from .polynomial import Polynomial


@dataclass(frozen=True)
class Reducer:
    """A divisor split into leading monomial, leading coefficient and tail"""
    lm: Monomial
    lc: Fraction
    tail: Tuple[Tuple[Monomial, Fraction], ...]

    @classmethod
    def of(cls, g: Polynomial, order: MonomialOrder) -> "Reducer":
        if g.is_zero():
            raise ZeroPolynomialError("cannot divide by the zero polynomial")
        lm, lc = g.leading_term(order)
        tail = tuple((m, c) for m, c in g.terms.items() if m != lm)
        return cls(lm, lc, tail)


def prepare_reducers(divisors: Sequence[Polynomial], order: MonomialOrder) -> List[Reducer]:
    return [Reducer.of(g, order) for g in divisors]


def reduce_terms(
    terms: Dict[Monomial, Fraction],
    reducers: Sequence[Reducer],
    order: MonomialOrder,
    quotients: Optional[List[Dict[Monomial, Fraction]]] = None,
) -> Dict[Monomial, Fraction]:
    """
    Remainder of `terms` modulo `reducers`.

    Terms are visited from the largest down; at each step the first reducer
    (in sequence order) whose leading monomial divides the current monomial is
    used. When `quotients` is given, cofactors are accumulated into it.
    """
    work = dict(terms)
    key = order.key
    heap = [(tuple(-k for k in key(m)), m) for m in work]
    heapq.heapify(heap)
    remainder: Dict[Monomial, Fraction] = {}

    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for idx, r in enumerate(reducers):
            if monomial_divides(r.lm, m):
                q = monomial_div(m, r.lm)
                factor = c / r.lc
                if quotients is not None:
                    qd = quotients[idx]
                    qd[q] = qd.get(q, 0) + factor
                for tm, tc in r.tail:
                    nm = monomial_mul(tm, q)
                    old = work.get(nm)
                    if old is None:
                        work[nm] = -factor * tc
                        heapq.heappush(heap, (tuple(-k for k in key(nm)), nm))
                    else:
                        s = old - factor * tc
                        if s:
                            work[nm] = s
                        else:
                            del work[nm]
                break
        else:
            remainder[m] = c
    return remainder


def normal_form(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """
    Full multivariate division remainder of f by `divisors`.

    No monomial of the result is divisible by a divisor's leading monomial.
    """
    if f.is_zero():
        return f
    reducers = prepare_reducers(divisors, order)
    return Polynomial._raw(reduce_terms(dict(f.terms), reducers, order), f.variables)


def normal_form_with(f: Polynomial, reducers: Sequence[Reducer], order: MonomialOrder) -> Polynomial:
    """normal_form with precomputed reducers"""
    if f.is_zero():
        return f
    return Polynomial._raw(reduce_terms(dict(f.terms), reducers, order), f.variables)


def divide(
    f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder
) -> Tuple[List[Polynomial], Polynomial]:
    """
    Division with quotients: f = sum(q_i * g_i) + r.

    Returns:
        (quotients, remainder)
    """
    reducers = prepare_reducers(divisors, order)
    quotients: List[Dict[Monomial, Fraction]] = [{} for _ in divisors]
    rem = reduce_terms(dict(f.terms), reducers, order, quotients)
    qs = [Polynomial(q, f.variables) for q in quotients]
    return qs, Polynomial._raw(rem, f.variables)

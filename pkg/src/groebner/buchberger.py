"""
Buchberger's algorithm, in two strategies.

- staged: self-reduce the current set, take the normal form of ALL pairwise
  S-polynomials, merge, repeat until a round produces nothing new. Keeps a
  per-stage trace.
- pairs: pair queue with the coprime criterion and the Gebauer-Möller update,
  normal (smallest lcm first) selection. Faster, no trace.

Both return the unique reduced Gröbner basis.
"""
from concurrent.futures import ProcessPoolExecutor, as_completed
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from loguru import logger

from config.settings import GROEBNER
from src.algebra import (
    MonomialOrder, Polynomial, dedupe_up_to_scalar, monomial_div, monomial_divides,
    monomial_lcm, monomial_mul, monomials_coprime, normal_form_with, prepare_reducers,
)
from src.errors import InvariantViolationError, ZeroPolynomialError
from .basis import GroebnerResult, StageRecord, minimalize, interreduce, reduced_basis, sort_ascending

STRATEGIES = ("staged", "pairs")


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """(lcm/LT(f))*f - (lcm/LT(g))*g over the leading monomials"""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("S-polynomial of a zero polynomial")
    lmf, lcf = f.leading_term(order)
    lmg, lcg = g.leading_term(order)
    lcm = monomial_lcm(lmf, lmg)
    return f.mul_term(monomial_div(lcm, lmf), 1 / lcf) - g.mul_term(monomial_div(lcm, lmg), 1 / lcg)


def self_reduce(G: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """
    Process elements in ascending order; each is replaced by the monic normal
    form with respect to the already-kept elements, or dropped if it reduces to 0.
    """
    kept: List[Polynomial] = []
    reducers = []
    for f in sort_ascending([g for g in G if not g.is_zero()], order):
        r = normal_form_with(f, reducers, order)
        if r.is_zero():
            continue
        r = r.monic(order)
        kept.append(r)
        reducers = prepare_reducers(kept, order)
    return sort_ascending(kept, order)


def _reduce_pair_chunk(
    G: Sequence[Polynomial], order: MonomialOrder, pairs: Sequence[Tuple[int, int]]
) -> List[Optional[Polynomial]]:
    reducers = prepare_reducers(G, order)
    out: List[Optional[Polynomial]] = []
    for i, j in pairs:
        r = normal_form_with(s_polynomial(G[i], G[j], order), reducers, order)
        out.append(None if r.is_zero() else r.monic(order))
    return out


def _stage_s_polynomials(
    G: List[Polynomial], order: MonomialOrder, workers: int
) -> List[Polynomial]:
    pairs = list(combinations(range(len(G)), 2))
    if workers <= 1 or len(pairs) < GROEBNER["parallel_min_pairs"]:
        results = _reduce_pair_chunk(G, order, pairs)
    else:
        size = max(1, len(pairs) // (workers * 4))
        chunks = [pairs[k:k + size] for k in range(0, len(pairs), size)]
        by_chunk: Dict[int, List[Optional[Polynomial]]] = {}
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {
                executor.submit(_reduce_pair_chunk, G, order, chunk): idx
                for idx, chunk in enumerate(chunks)
            }
            for future in as_completed(futures):
                by_chunk[futures[future]] = future.result()
        results = [r for idx in range(len(chunks)) for r in by_chunk[idx]]
    return [r for r in results if r is not None]


def buchberger_staged(
    generators: Sequence[Polynomial],
    order: MonomialOrder,
    workers: int = 1,
    max_stages: Optional[int] = None,
) -> GroebnerResult:
    """
    Staged Buchberger algorithm with a per-stage trace.

    Args:
        generators: ideal generators (zeros and scalar duplicates are dropped)
        order: monomial order
        workers: process workers for the S-polynomial reductions of a stage
        max_stages: stop with an InvariantViolationError past this many stages

    Returns:
        GroebnerResult with the reduced basis and one StageRecord per stage
    """
    max_stages = max_stages or GROEBNER["max_stages"]
    current = dedupe_up_to_scalar(generators, order)
    if not current:
        return GroebnerResult([], order, [], "staged")

    trace: List[StageRecord] = []
    stage = 0
    while True:
        stage += 1
        if stage > max_stages:
            raise InvariantViolationError(f"staged Buchberger exceeded {max_stages} stages")
        before = len(current)
        reduced = self_reduce(current, order)
        new = _stage_s_polynomials(reduced, order, workers)
        record = StageRecord(stage, before, before - len(reduced), len(reduced), len(new))
        trace.append(record)
        logger.debug(
            f"[Buchberger] stage {stage}: {before} elements, {record.eliminated_by_self_reduce} "
            f"eliminated, {len(reduced)} surviving, {len(new)} nonzero S-polynomials"
        )
        if not new:
            break
        current = sort_ascending(reduced + new, order)

    basis = reduced_basis(reduced, order)
    logger.info(f"[Buchberger] staged: {len(basis)} basis elements after {stage} stages")
    return GroebnerResult(basis, order, trace, "staged")


def _update(
    G: List[Polynomial],
    lms: List[tuple],
    P: Set[Tuple[int, int]],
    f: Polynomial,
    order: MonomialOrder,
) -> None:
    """Add f to G and update the pair set with the Gebauer-Möller criteria"""
    lmf = f.leading_monomial(order)
    k = len(G)
    P_kept = set()
    for i, j in P:
        lij = monomial_lcm(lms[i], lms[j])
        if (not monomial_divides(lmf, lij)
                or lij == monomial_lcm(lms[i], lmf)
                or lij == monomial_lcm(lms[j], lmf)):
            P_kept.add((i, j))

    by_lcm: Dict[tuple, List[int]] = {}
    for i in range(k):
        by_lcm.setdefault(monomial_lcm(lms[i], lmf), []).append(i)
    minimal: List[tuple] = []
    for L in sorted(by_lcm, key=order.key):
        if all(not monomial_divides(L2, L) for L2 in minimal):
            minimal.append(L)
    for L in minimal:
        idxs = by_lcm[L]
        if not any(monomials_coprime(lms[i], lmf) for i in idxs):
            P_kept.add((min(idxs), k))

    G.append(f)
    lms.append(lmf)
    P.clear()
    P.update(P_kept)


def buchberger(generators: Sequence[Polynomial], order: MonomialOrder) -> GroebnerResult:
    """Pair-queue Buchberger; returns the reduced basis with an empty trace"""
    G: List[Polynomial] = []
    lms: List[tuple] = []
    P: Set[Tuple[int, int]] = set()
    for f in dedupe_up_to_scalar(generators, order):
        if f.is_constant():
            return GroebnerResult([Polynomial.one(f.variables)], order, [], "pairs")
        _update(G, lms, P, f, order)

    reducers = prepare_reducers(G, order)
    processed = 0
    while P:
        i, j = min(P, key=lambda p: (order.key(monomial_lcm(lms[p[0]], lms[p[1]])), p))
        P.remove((i, j))
        r = normal_form_with(s_polynomial(G[i], G[j], order), reducers, order)
        processed += 1
        if r.is_zero():
            continue
        r = r.monic(order)
        if r.is_constant():
            logger.debug(f"[Buchberger] unit ideal after {processed} pairs")
            return GroebnerResult([r], order, [], "pairs")
        _update(G, lms, P, r, order)
        reducers = reducers + prepare_reducers([r], order)
        if len(G) % 50 == 0:
            logger.debug(f"[Buchberger] {len(G)} elements, {len(P)} pairs pending")

    basis = interreduce(minimalize(G, order), order)
    logger.info(f"[Buchberger] pairs: {len(basis)} basis elements, {processed} pairs reduced")
    return GroebnerResult(basis, order, [], "pairs")


def groebner_basis(
    generators: Sequence[Polynomial],
    order: MonomialOrder,
    strategy: Optional[str] = None,
    workers: int = 1,
) -> GroebnerResult:
    """Reduced Gröbner basis with the configured strategy"""
    strategy = strategy or GROEBNER["strategy"]
    if strategy == "staged":
        return buchberger_staged(generators, order, workers=workers)
    if strategy == "pairs":
        return buchberger(generators, order)
    raise ValueError(f"unknown Gröbner strategy '{strategy}' (expected one of {STRATEGIES})")

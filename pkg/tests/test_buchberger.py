import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy

from src.algebra import (
    MonomialOrder, OrderKind, Polynomial, VariableSet, format_polynomial, normal_form, parse_polynomial,
)
from src.errors import InvariantViolationError
from src.groebner import (
    buchberger, buchberger_staged, groebner_basis, reduced_basis, s_polynomial, self_reduce,
)


def _to_sympy(f: Polynomial, order: MonomialOrder):
    return sympy.sympify(format_polynomial(f, order).replace("^", "**"))


def _sympy_basis(generators, order: MonomialOrder):
    """Monic reduced basis from sympy, in our representation"""
    gens = sympy.symbols(order.ranking)
    exprs = [_to_sympy(f, order) for f in generators]
    G = sympy.groebner(exprs, *gens, order="grevlex")
    out = set()
    for expr in G.exprs:
        poly = sympy.Poly(expr, *gens)
        terms = {}
        for monom, coeff in poly.terms():
            exps = dict(zip(order.ranking, monom))
            key = tuple(exps[name] for name in order.variables.names)
            num, den = sympy.fraction(coeff)
            terms[key] = Fraction(int(num), int(den))
        out.add(Polynomial(terms, order.variables).monic(order))
    return out


def _random_polynomial(rng, variables, max_degree=2, n_terms=3):
    terms = {}
    for _ in range(n_terms):
        while True:
            m = tuple(rng.randint(0, max_degree) for _ in variables.names)
            if sum(m) <= max_degree:
                break
        terms[m] = Fraction(rng.randint(-3, 3) or 1)
    return Polynomial(terms, variables)


def test_s_polynomial_cancels_leading_terms(xy):
    order = MonomialOrder(OrderKind.LEX, xy)
    p = lambda s: parse_polynomial(s, xy)
    assert s_polynomial(p("x^2 - y"), p("x*y - 1"), order) == p("-y^2 + x")
    assert s_polynomial(p("x^2"), p("x*y"), order) == 0


def test_textbook_basis(xy):
    order = MonomialOrder(OrderKind.GRLEX, xy)
    p = lambda s: parse_polynomial(s, xy)
    gens = [p("x^3 - 2*x*y"), p("x^2*y - 2*y^2 + x")]
    for strategy in ("staged", "pairs"):
        result = groebner_basis(gens, order, strategy)
        assert result.formatted() == ["y^2 - 1/2*x", "x*y", "x^2"]
        assert result.strategy == strategy


def test_staged_trace_is_consistent(poly, grevlex):
    gens = [poly("x^2 + y*z - 1"), poly("x*y - z^2"), poly("y^2 - x + z")]
    result = buchberger_staged(gens, grevlex)
    trace = result.trace
    assert trace[0].elements_before_self_reduce == 3
    assert trace[-1].nonzero_s_polynomials == 0
    for rec in trace:
        assert rec.surviving_generators == rec.elements_before_self_reduce - rec.eliminated_by_self_reduce
    for prev, nxt in zip(trace, trace[1:]):
        assert nxt.elements_before_self_reduce == prev.surviving_generators + prev.nonzero_s_polynomials
    assert [r.stage for r in trace] == list(range(1, len(trace) + 1))


def test_unit_ideal():
    variables = VariableSet(("A",))
    order = MonomialOrder(OrderKind.GREVLEX, variables)
    gens = [parse_polynomial("A + 1", variables), parse_polynomial("A", variables)]
    for strategy in ("staged", "pairs"):
        result = groebner_basis(gens, order, strategy)
        assert result.is_unit()
        assert result.formatted() == ["1"]


def test_empty_and_zero_generators(xyz, grevlex):
    zero = Polynomial.zero(xyz)
    assert groebner_basis([], grevlex, "staged").basis == []
    assert groebner_basis([zero], grevlex, "pairs").basis == []


def test_self_reduce_drops_redundant(poly, grevlex):
    out = self_reduce([poly("x"), poly("x^2 + x*y"), poly("2*y")], grevlex)
    assert out == [poly("y"), poly("x")]


def test_reduced_basis_with_constant(poly, grevlex):
    assert reduced_basis([poly("x*y"), poly("3")], grevlex) == [poly("1")]


def test_unknown_strategy(poly, grevlex):
    with pytest.raises(ValueError):
        groebner_basis([poly("x")], grevlex, "f4")


def test_stage_limit(poly, grevlex):
    gens = [poly("x^2 - y"), poly("x*y - 1")]
    with pytest.raises(InvariantViolationError, match="exceeded 1 stages"):
        buchberger_staged(gens, grevlex, max_stages=1)
    assert len(buchberger_staged(gens, grevlex, max_stages=10).trace) >= 2


def _random_ideal(seed, variables):
    rng = random.Random(seed)
    gens = [_random_polynomial(rng, variables) for _ in range(rng.randint(2, 3))]
    return [g for g in gens if not g.is_zero()]


def _seeds(count, fast=8):
    return [*range(fast), *(pytest.param(s, marks=pytest.mark.slow) for s in range(fast, count))]


@pytest.mark.parametrize("seed", _seeds(50))
def test_matches_sympy_on_random_ideals(seed, xyz, grevlex):
    gens = _random_ideal(seed, xyz)
    expected = _sympy_basis(gens, grevlex)
    for strategy in ("staged", "pairs"):
        result = groebner_basis(gens, grevlex, strategy)
        assert set(result.basis) == expected
        assert all(normal_form(g, result.basis, grevlex).is_zero() for g in gens)
        for f, g in combinations(result.basis, 2):
            assert normal_form(s_polynomial(f, g, grevlex), result.basis, grevlex).is_zero()


def test_ranking_is_respected(xyz):
    order = MonomialOrder(OrderKind.GREVLEX, xyz, ("z", "x", "y"))
    p = lambda s: parse_polynomial(s, xyz)
    gens = [p("x*y - z"), p("y^2 - x*z + 1")]
    assert set(buchberger(gens, order).basis) == _sympy_basis(gens, order)


@pytest.mark.parametrize("seed", _seeds(25, fast=5))
def test_generator_permutation_invariance(seed, xyz, grevlex):
    gens = _random_ideal(seed, xyz) + [_random_polynomial(random.Random(100 + seed), xyz)]
    reference = groebner_basis(gens, grevlex, "staged").basis
    rng = random.Random(seed)
    for _ in range(3):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert groebner_basis(shuffled, grevlex, "staged").basis == reference
        assert groebner_basis(shuffled, grevlex, "pairs").basis == reference


@pytest.mark.parametrize("seed", _seeds(25, fast=5))
def test_generator_scaling_invariance(seed, xyz, grevlex):
    gens = _random_ideal(seed, xyz)
    reference = groebner_basis(gens, grevlex, "pairs").basis
    rng = random.Random(seed)
    scaled = [g.scale(Fraction(rng.choice([-3, -2, -1, 2, 5]), rng.randint(1, 4))) for g in gens]
    assert groebner_basis(scaled, grevlex, "pairs").basis == reference
    assert groebner_basis(scaled, grevlex, "staged").basis == reference


def test_workers_do_not_change_the_result(poly, grevlex, monkeypatch):
    from config import settings
    monkeypatch.setitem(settings.GROEBNER, "parallel_min_pairs", 1)
    gens = [poly("x^2 + y*z - 1"), poly("x*y - z^2"), poly("y^2 - x + z")]
    single = buchberger_staged(gens, grevlex, workers=1)
    pooled = buchberger_staged(gens, grevlex, workers=2)
    assert pooled.basis == single.basis
    assert pooled.trace == single.trace

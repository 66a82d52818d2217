"""
One binary operation: O(2) has the two monomials (x1 x2)x3 and x1(x2 x3),
with the form +1 on the first and -1 on the second. A rank-1 relation
a*m1 + b*m2 is self-dual iff it is orthogonal to itself, i.e. a^2 - b^2 = 0.
"""
from fractions import Fraction
from math import gcd
from typing import List, Set, Tuple

from loguru import logger

from src.algebra import MonomialOrder, OrderKind, Polynomial, VariableSet, format_polynomial
from src.linalg import PolyMatrix, rcf_numeric
from src.operads import koszul_dual_matrix, osborn_unital_check
from src.storage import OneOperationSolution

COEFFS = VariableSet(("a", "b"))
_EMPTY = VariableSet(())


def form_matrix() -> PolyMatrix:
    a = Polynomial.variable("a", COEFFS)
    b = Polynomial.variable("b", COEFFS)
    return PolyMatrix([[a, b], [b, a]], COEFFS, 2)


def self_duality_condition() -> Polynomial:
    """Vanishing minor of [[a, b], [b, a]]"""
    M = form_matrix()
    return M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]


def _divisors(n: int) -> List[int]:
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def rational_roots(f: Polynomial, var: str) -> List[Fraction]:
    """Rational roots of a univariate polynomial (rational root test)"""
    idx = f.variables.index(var)
    coeffs = {m[idx]: c for m, c in f.terms.items()}
    if not coeffs:
        return []
    lcm_den = 1
    for c in coeffs.values():
        lcm_den = lcm_den * c.denominator // gcd(lcm_den, c.denominator)
    ints = {k: int(c * lcm_den) for k, c in coeffs.items()}
    low = min(ints)
    ints = {k - low: v for k, v in ints.items()}
    roots: Set[Fraction] = {Fraction(0)} if low > 0 else set()
    deg = max(ints)
    if deg == 0:
        return sorted(roots)
    candidates = {
        Fraction(sign * p, q)
        for p in _divisors(ints[0])
        for q in _divisors(ints[deg])
        for sign in (1, -1)
    }
    for x in candidates:
        if sum(c * x ** k for k, c in ints.items()) == 0:
            roots.add(x)
    return sorted(roots)


def _normalize(a: Fraction, b: Fraction) -> Tuple[int, int]:
    """Scale to coprime integers with a positive leading entry"""
    den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    x, y = int(a * den), int(b * den)
    g = gcd(x, y) or 1
    x, y = x // g, y // g
    if x < 0 or (x == 0 and y < 0):
        x, y = -x, -y
    return x, y


def is_self_dual(a: int, b: int) -> bool:
    """Dual of the one-row space [a b] equals itself"""
    if a == 0 and b == 0:
        return False
    R = rcf_numeric(PolyMatrix([[a, b]], _EMPTY, 2))
    dual = koszul_dual_matrix(R, negated=(2,))
    return rcf_numeric(dual) == R


def one_operation_classification() -> List[OneOperationSolution]:
    """Self-dual rank-1 relations up to scale, tagged with the unitality check"""
    condition = self_duality_condition()
    solutions: Set[Tuple[int, int]] = set()

    # chart a = 1
    order = MonomialOrder(OrderKind.LEX, COEFFS)
    affine = condition.substitute({"a": Polynomial.one(COEFFS)})
    for root in rational_roots(affine, "b"):
        solutions.add(_normalize(Fraction(1), root))
    # chart a = 0: b^2 = 0 leaves only the zero relation
    at_zero = condition.substitute({"a": Polynomial.zero(COEFFS)})
    for root in rational_roots(at_zero, "b"):
        if root != 0:
            solutions.add(_normalize(Fraction(0), root))

    out = []
    for a, b in sorted(solutions, key=lambda s: (s[1], s[0])):
        if not is_self_dual(a, b):
            logger.warning(f"[OneOperation] ({a},{b}) solves the condition but is not self-dual")
            continue
        unital = osborn_unital_check([a, b])
        name = "associativity" if (a, b) == (1, -1) else "anti-associativity" if (a, b) == (1, 1) else "other"
        out.append(OneOperationSolution(a, b, unital, name))
    logger.info(f"[OneOperation] {len(out)} self-dual relations, condition {format_polynomial(condition, order)} = 0")
    return out

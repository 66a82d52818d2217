"""
Sparse multivariate polynomials with exact rational coefficients.
"""
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from src.errors import UnknownVariableError, VariableSetMismatchError, ZeroPolynomialError
from .monomials import Monomial, MonomialOrder, OrderKind, VariableSet, monomial_mul

Scalar = Union[int, Fraction]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class Polynomial:
    """
    Element of Q[x1, ..., xn] stored as {exponent tuple: coefficient}.

    Values are immutable and canonical: no zero coefficients, so two
    polynomials over the same VariableSet are equal iff their term maps are.
    """
    __slots__ = ("_terms", "variables", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar], variables: VariableSet):
        n = len(variables)
        clean: Dict[Monomial, Fraction] = {}
        for m, c in terms.items():
            if len(m) != n:
                raise VariableSetMismatchError(f"monomial {m} has wrong length for {variables.names}")
            c = _as_fraction(c)
            if c:
                clean[tuple(m)] = c
        self._terms = clean
        self.variables = variables
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], variables: VariableSet) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p._terms = terms
        p.variables = variables
        p._hash = None
        return p

    # Constructors

    @classmethod
    def zero(cls, variables: VariableSet) -> "Polynomial":
        return cls._raw({}, variables)

    @classmethod
    def constant(cls, c: Scalar, variables: VariableSet) -> "Polynomial":
        c = _as_fraction(c)
        return cls._raw({variables.unit(): c} if c else {}, variables)

    @classmethod
    def one(cls, variables: VariableSet) -> "Polynomial":
        return cls.constant(1, variables)

    @classmethod
    def variable(cls, name: str, variables: VariableSet) -> "Polynomial":
        return cls._raw({variables.generator(name): Fraction(1)}, variables)

    # Inspection

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        unit = self.variables.unit()
        return all(m == unit for m in self._terms)

    def constant_value(self) -> Fraction:
        """Coefficient of the unit monomial"""
        return self._terms.get(self.variables.unit(), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def used_variables(self) -> List[str]:
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return [self.variables.names[i] for i in sorted(used)]

    def is_affine_linear(self) -> bool:
        return self.total_degree() <= 1

    # Ring operations

    def _check(self, other: "Polynomial"):
        if self.variables != other.variables:
            raise VariableSetMismatchError(
                f"{self.variables.names} vs {other.variables.names}"
            )

    def _coerce(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.variables)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial._raw(terms, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = monomial_mul(m1, m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial._raw(terms, self.variables)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Polynomial.one(self.variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.variables)
        return Polynomial._raw({m: v * c for m, v in self._terms.items()}, self.variables)

    def mul_term(self, monomial: Monomial, coeff: Scalar = 1) -> "Polynomial":
        coeff = _as_fraction(coeff)
        if not coeff:
            return Polynomial.zero(self.variables)
        return Polynomial._raw(
            {monomial_mul(m, monomial): c * coeff for m, c in self._terms.items()},
            self.variables,
        )

    # Equality

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # Order-dependent queries

    def sorted_terms(self, order: MonomialOrder) -> List[Tuple[Monomial, Fraction]]:
        """Terms in descending order"""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self.leading_term(order)[1]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, lc = self.leading_term(order)
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def sort_key(self, order: MonomialOrder) -> Tuple:
        """Compares polynomials term by term from the top; used to sort bases"""
        return tuple((order.key(m), c) for m, c in self.sorted_terms(order))

    # Ring changes

    def in_ring(self, variables: VariableSet) -> "Polynomial":
        """Re-express over another VariableSet containing every used variable"""
        if variables == self.variables:
            return self
        mapping = []
        for i, name in enumerate(self.variables.names):
            mapping.append(variables.names.index(name) if name in variables else None)
        n = len(variables)
        terms = {}
        for m, c in self._terms.items():
            exps = [0] * n
            for i, e in enumerate(m):
                if not e:
                    continue
                j = mapping[i]
                if j is None:
                    raise UnknownVariableError(self.variables.names[i])
                exps[j] = e
            terms[tuple(exps)] = c
        return Polynomial._raw(terms, variables)

    def substitute(
        self,
        assignments: Mapping[str, "Polynomial"],
        target: Optional[VariableSet] = None,
    ) -> "Polynomial":
        """
        Replace variables by polynomials over `target`.

        Variables without an assignment must exist in `target` and are kept.

        Args:
            assignments: variable name -> value (Polynomial over target, or rational)
            target: ring of the result (defaults to this polynomial's ring)

        Returns:
            The substituted polynomial over `target`
        """
        target = target if target is not None else self.variables
        values = []
        for name in self.variables.names:
            if name in assignments:
                v = assignments[name]
                if not isinstance(v, Polynomial):
                    v = Polynomial.constant(v, target)
                elif v.variables != target:
                    v = v.in_ring(target)
                values.append(v)
            elif name in target:
                values.append(Polynomial.variable(name, target))
            else:
                values.append(None)

        powers: Dict[Tuple[int, int], Polynomial] = {}
        result = Polynomial.zero(target)
        for m, c in self._terms.items():
            term = Polynomial.constant(c, target)
            for i, e in enumerate(m):
                if not e:
                    continue
                if values[i] is None:
                    raise UnknownVariableError(self.variables.names[i])
                p = powers.get((i, e))
                if p is None:
                    p = values[i] ** e
                    powers[(i, e)] = p
                term = term * p
            result = result + term
        return result

    def __repr__(self) -> str:
        from .parser import format_polynomial
        order = MonomialOrder(OrderKind.GREVLEX, self.variables)
        return f"Polynomial({format_polynomial(self, order)!r})"


# Functional aliases

def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def leading_term(f: Polynomial, order: MonomialOrder) -> Tuple[Monomial, Fraction]:
    return f.leading_term(order)


def monic_form(f: Polynomial, order: MonomialOrder) -> Polynomial:
    return f.monic(order)


def polynomial_sort_key(order: MonomialOrder):
    return lambda f: f.sort_key(order)


def dedupe_up_to_scalar(polys: Iterable[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Monic forms of the nonzero inputs, first occurrence kept"""
    seen = set()
    out = []
    for f in polys:
        if f.is_zero():
            continue
        g = f.monic(order)
        if g not in seen:
            seen.add(g)
            out.append(g)
    return out

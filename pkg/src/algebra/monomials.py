"""
Variable sets, monomials and monomial orders.

A monomial is a plain tuple of nonnegative exponents, one per variable of a
VariableSet. Orders are applied on demand through sort keys: the larger key is
the larger monomial.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

from src.errors import UnknownVariableError, VariableSetMismatchError

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class VariableSet:
    """Ordered names of the indeterminates of a polynomial ring"""
    names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @classmethod
    def of(cls, *names: str) -> "VariableSet":
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariableError(name) from None

    def unit(self) -> Monomial:
        return (0,) * len(self.names)

    def generator(self, name: str) -> Monomial:
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return tuple(exps)

    def extended(self, names: Iterable[str]) -> "VariableSet":
        extra = [n for n in names if n not in self.names]
        return VariableSet(self.names + tuple(extra))

    def restricted(self, names: Iterable[str]) -> "VariableSet":
        keep = set(names)
        return VariableSet(tuple(n for n in self.names if n in keep))


class OrderKind(Enum):
    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a"""
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(b: Monomial, a: Monomial) -> bool:
    """True iff b divides a"""
    return all(y <= x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def monomials_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """
    Total order on the monomials of a VariableSet.

    `ranking` lists the variables from greatest to least, so the default
    ranking (the VariableSet order) makes the first variable the greatest.
    """
    kind: OrderKind
    variables: VariableSet
    ranking: Tuple[str, ...] = ()
    _positions: Tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)
    _cache: Dict[Monomial, Tuple[int, ...]] = field(
        default_factory=dict, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        kind = self.kind if isinstance(self.kind, OrderKind) else OrderKind(self.kind)
        object.__setattr__(self, "kind", kind)
        ranking = tuple(self.ranking) or self.variables.names
        if sorted(ranking) != sorted(self.variables.names):
            raise VariableSetMismatchError(
                f"ranking {ranking} is not a permutation of {self.variables.names}"
            )
        object.__setattr__(self, "ranking", ranking)
        object.__setattr__(self, "_positions", tuple(self.variables.index(n) for n in ranking))

    @classmethod
    def create(
        cls,
        kind: str,
        variables: VariableSet,
        ranking: Optional[Sequence[str]] = None,
    ) -> "MonomialOrder":
        return cls(OrderKind(kind), variables, tuple(ranking or ()))

    def __getstate__(self):
        state = dict(self.__dict__)
        state["_cache"] = {}
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)

    def with_variables(self, variables: VariableSet) -> "MonomialOrder":
        """Same kind on another ring, keeping the relative ranking of shared names"""
        shared = [n for n in self.ranking if n in variables]
        rest = [n for n in variables.names if n not in self.ranking]
        return MonomialOrder(self.kind, variables, tuple(shared + rest))

    def key(self, m: Monomial) -> Tuple[int, ...]:
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        pos = self._positions
        if self.kind is OrderKind.LEX:
            k = tuple(m[i] for i in pos)
        elif self.kind is OrderKind.GRLEX:
            k = (sum(m),) + tuple(m[i] for i in pos)
        else:
            # grevlex: degree first, then the smaller exponent in the least variable wins
            k = (sum(m),) + tuple(-m[i] for i in reversed(pos))
        if len(self._cache) < 500_000:
            self._cache[m] = k
        return k

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(self.variables) or len(b) != len(self.variables):
            raise VariableSetMismatchError("monomial length does not match the order's variables")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def max_monomial(self, monomials: Iterable[Monomial]) -> Monomial:
        return max(monomials, key=self.key)


def compare_monomials(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """-1, 0 or 1 as a is less than, equal to or greater than b"""
    return order.compare(a, b)

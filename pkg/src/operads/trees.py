"""
Tree monomials of a nonsymmetric operad with two binary operations.

A tree monomial of weight w is a complete binary tree with w internal nodes,
each labelled by an operation. Operations render as "|-" (left) and "-|"
(right); arguments are implicit and render as x1, x2, ... in order.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator, List, Tuple, Union

from config.settings import ENUMERATION
from src.errors import EnumerationBoundError

LEFT_OP = "|-"
RIGHT_OP = "-|"
OPERATIONS = (LEFT_OP, RIGHT_OP)

# a shape is () for a leaf, (left, right) for an internal node
Shape = Union[Tuple[()], Tuple["Shape", "Shape"]]


@dataclass(frozen=True)
class TreeMonomial:
    """Binary tree shape plus operation labels in in-order traversal"""
    shape: Shape
    labels: Tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != _internal_nodes(self.shape):
            raise ValueError("label count must equal the number of internal nodes")

    @property
    def weight(self) -> int:
        return len(self.labels)

    @property
    def leaf_count(self) -> int:
        return self.weight + 1

    def render(self) -> str:
        """e.g. '(x1|-x2)-|x3'"""
        labels = iter(self.labels)
        leaves = iter(range(1, self.leaf_count + 1))

        def walk(shape: Shape, outer: bool) -> str:
            if shape == ():
                return f"x{next(leaves)}"
            left = walk(shape[0], False)
            op = next(labels)
            right = walk(shape[1], False)
            text = f"{left}{op}{right}"
            return text if outer else f"({text})"

        return walk(self.shape, True)

    def __str__(self) -> str:
        return self.render()


def _internal_nodes(shape: Shape) -> int:
    if shape == ():
        return 0
    return 1 + _internal_nodes(shape[0]) + _internal_nodes(shape[1])


@lru_cache(maxsize=None)
def tree_shapes(w: int) -> Tuple[Shape, ...]:
    """All shapes with w internal nodes, left-heavy first"""
    if w == 0:
        return ((),)
    shapes = []
    for left_size in range(w - 1, -1, -1):
        for left in tree_shapes(left_size):
            for right in tree_shapes(w - 1 - left_size):
                shapes.append((left, right))
    return tuple(shapes)


def dimension(w: int) -> int:
    """Number of tree monomials of weight w: 2^w * Catalan(w)"""
    if w < 0:
        raise ValueError("weight must be nonnegative")
    return 2 ** w * comb(2 * w, w) // (w + 1)


def iter_basis(w: int) -> Iterator[TreeMonomial]:
    for shape in tree_shapes(w):
        for labels in product(OPERATIONS, repeat=w):
            yield TreeMonomial(shape, labels)


def enumerate_basis(w: int) -> List[TreeMonomial]:
    """
    Ordered basis of the weight-w component.

    Shapes come in association-type order (left-nested first); within a shape
    the in-order label sequences are lexicographic with |- before -|. For w=2
    this is the column order of every relation matrix.
    """
    if w > ENUMERATION["max_weight"]:
        raise EnumerationBoundError(f"weight {w} exceeds the bound {ENUMERATION['max_weight']}")
    if w < 0:
        raise ValueError("weight must be nonnegative")
    return list(iter_basis(w))


def quadratic_basis_labels() -> List[str]:
    return [t.render() for t in enumerate_basis(2)]

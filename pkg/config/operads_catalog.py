"""
Catalogue of named quadratic operads with two binary operations.

Relations are written in the ordered basis of O(2):
    e1 (x1|-x2)|-x3    e5 x1|-(x2|-x3)
    e2 (x1|-x2)-|x3    e6 x1|-(x2-|x3)
    e3 (x1-|x2)|-x3    e7 x1-|(x2|-x3)
    e4 (x1-|x2)-|x3    e8 x1-|(x2-|x3)
Each relation is a map label -> coefficient.
"""

# Associativity of each operation
_ASSOC_LEFT = {"(x1|-x2)|-x3": 1, "x1|-(x2|-x3)": -1}
_ASSOC_RIGHT = {"(x1-|x2)-|x3": 1, "x1-|(x2-|x3)": -1}
_INNER_ASSOC = {"(x1|-x2)-|x3": 1, "x1|-(x2-|x3)": -1}

OPERADS_CATALOG = {
    "two-associative": {
        "description": "both operations associative",
        "relations": [_ASSOC_LEFT, _ASSOC_RIGHT],
        "dual": "dual-two-associative",
    },
    "dual-two-associative": {
        "description": "associativity, and every mixed monomial vanishes",
        "relations": [
            _ASSOC_LEFT, _ASSOC_RIGHT,
            {"(x1|-x2)-|x3": 1}, {"(x1-|x2)|-x3": 1},
            {"x1|-(x2-|x3)": 1}, {"x1-|(x2|-x3)": 1},
        ],
        "dual": "two-associative",
    },
    "duplicial": {
        "description": "associativity and inner associativity",
        "relations": [_ASSOC_LEFT, _ASSOC_RIGHT, _INNER_ASSOC],
        "dual": "dual-duplicial",
    },
    "dual-duplicial": {
        "description": "associativity, inner associativity, (x1-|x2)|-x3 = x1-|(x2|-x3) = 0",
        "relations": [
            _ASSOC_LEFT, _ASSOC_RIGHT, _INNER_ASSOC,
            {"(x1-|x2)|-x3": 1}, {"x1-|(x2|-x3)": 1},
        ],
        "dual": "duplicial",
    },
    "completely-associative": {
        "description": "every pair of operations associates",
        "relations": [
            _ASSOC_LEFT, _INNER_ASSOC,
            {"(x1-|x2)|-x3": 1, "x1-|(x2|-x3)": -1},
            _ASSOC_RIGHT,
        ],
        "dual": "completely-associative",
    },
    "two-compatible": {
        "description": "every linear combination of the operations is associative",
        "relations": [
            _ASSOC_LEFT, _ASSOC_RIGHT,
            {"(x1|-x2)-|x3": 1, "(x1-|x2)|-x3": 1, "x1|-(x2-|x3)": -1, "x1-|(x2|-x3)": -1},
        ],
        "dual": "dual-two-compatible",
    },
    "dual-two-compatible": {
        # totally compatible: the four mixed monomials agree
        "description": "associativity and (x1|-x2)-|x3 = x1|-(x2-|x3) = (x1-|x2)|-x3 = x1-|(x2|-x3)",
        "relations": [
            _ASSOC_LEFT, _ASSOC_RIGHT, _INNER_ASSOC,
            {"(x1-|x2)|-x3": 1, "x1-|(x2|-x3)": -1},
            {"(x1|-x2)-|x3": 1, "(x1-|x2)|-x3": -1},
        ],
        "dual": "two-compatible",
    },
    "diassociative": {
        "description": "associative dialgebras",
        "relations": [
            _ASSOC_LEFT, _ASSOC_RIGHT, _INNER_ASSOC,
            {"(x1-|x2)|-x3": 1, "x1|-(x2|-x3)": -1},
            {"(x1-|x2)-|x3": 1, "x1-|(x2|-x3)": -1},
        ],
        "dual": "dendriform",
    },
    "dendriform": {
        "description": "dendriform algebras",
        "relations": [
            _INNER_ASSOC,
            {"(x1-|x2)-|x3": 1, "x1-|(x2-|x3)": -1, "x1-|(x2|-x3)": -1},
            {"x1|-(x2|-x3)": 1, "(x1|-x2)|-x3": -1, "(x1-|x2)|-x3": -1},
        ],
        "dual": "diassociative",
    },
}

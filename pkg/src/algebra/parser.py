"""
Text grammar for polynomials.

    expr   := ['-'] term (('+'|'-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := IDENT ('^' UINT)?
    coeff  := INT ('/' UINT)?

Whitespace is insignificant and multiplication is explicit.
"""
import re
from fractions import Fraction
from typing import List, Optional, Tuple

from src.errors import PolynomialSyntaxError, UnknownVariableError
from .monomials import Monomial, MonomialOrder, VariableSet
from .polynomial import Polynomial

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^])|(?P<bad>\S))")

Token = Tuple[str, str, int]


def _tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            break  # trailing whitespace
        kind = match.lastgroup
        value = match.group(kind)
        start = match.start(kind)
        if kind == "bad":
            raise PolynomialSyntaxError(f"unexpected character {value!r}", start, text)
        tokens.append((kind, value, start))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str, variables: VariableSet):
        self.text = text
        self.variables = variables
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def position(self) -> int:
        tok = self.peek()
        return tok[2] if tok else len(self.text)

    def error(self, message: str):
        raise PolynomialSyntaxError(message, self.position(), self.text)

    def take(self, kind: str, value: Optional[str] = None) -> Token:
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            expected = value or kind
            found = "end of input" if tok is None else repr(tok[1])
            self.error(f"expected {expected}, found {found}")
        self.i += 1
        return tok

    def accept_op(self, value: str) -> bool:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == value:
            self.i += 1
            return True
        return False

    def parse(self) -> Polynomial:
        if self.peek() is None:
            self.error("empty polynomial")
        terms = {}
        sign = -1 if self.accept_op("-") else 1
        while True:
            m, c = self.term()
            c = c * sign
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
            if self.accept_op("+"):
                sign = 1
            elif self.accept_op("-"):
                sign = -1
            elif self.peek() is None:
                break
            else:
                self.error(f"unexpected token {self.peek()[1]!r}")
        return Polynomial(terms, self.variables)

    def term(self) -> Tuple[Monomial, Fraction]:
        exps = [0] * len(self.variables)
        tok = self.peek()
        if tok is None:
            self.error("expected a term")
        if tok[0] == "int":
            coeff = self.coeff()
        elif tok[0] == "ident":
            coeff = Fraction(1)
            self.factor(exps)
        else:
            self.error(f"unexpected token {tok[1]!r}")
        while self.accept_op("*"):
            self.factor(exps)
        return tuple(exps), coeff

    def coeff(self) -> Fraction:
        num = int(self.take("int")[1])
        if self.accept_op("/"):
            tok = self.take("int")
            den = int(tok[1])
            if den == 0:
                raise PolynomialSyntaxError("zero denominator", tok[2], self.text)
            return Fraction(num, den)
        return Fraction(num)

    def factor(self, exps: List[int]):
        _, name, start = self.take("ident")
        if name not in self.variables:
            raise UnknownVariableError(name, start)
        power = 1
        if self.accept_op("^"):
            power = int(self.take("int")[1])
        exps[self.variables.index(name)] += power


def parse_polynomial(text: str, variables: VariableSet) -> Polynomial:
    """
    Parse `text` into a Polynomial over `variables`.

    Raises:
        PolynomialSyntaxError: text does not follow the grammar (carries the position)
        UnknownVariableError: an identifier is not in `variables`
    """
    return _Parser(text, variables).parse()


def _format_monomial(m: Monomial, variables: VariableSet) -> str:
    parts = []
    for name, e in zip(variables.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: MonomialOrder) -> str:
    """Terms in descending order, e.g. 'X3*Y2*Y3 - X2*Y3^2 + X2'"""
    if f.is_zero():
        return "0"
    out = []
    for idx, (m, c) in enumerate(f.sorted_terms(order)):
        mono = _format_monomial(m, f.variables)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)

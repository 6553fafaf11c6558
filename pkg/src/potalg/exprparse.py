"""A small expression language for potentials and polynomials.

Grammar (noncommutative products, order preserved):

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | juxtaposition) factor)*
    factor   := atom ['^' uint] ('/' uint)*
    atom     := rational | ident | '(' expr ')' | '-' atom
    rational := uint ['/' uint]

Juxtaposition multiplies ("x y" == "x*y").  Identifiers x, y, z are the
generators; any other identifier is a parameter to be bound at lowering
time.  The printer emits canonical text that reparses to an identical
tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .ncalg import LETTERS, NCPoly, Potential, as_fraction

__all__ = [
    "ExprError",
    "Num",
    "Var",
    "Param",
    "Neg",
    "Sum",
    "Prod",
    "Pow",
    "Quot",
    "parse_expression",
    "print_expression",
    "lower_ncpoly",
    "lower_potential",
    "lower_commpoly",
    "free_parameters",
]


class ExprError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    letter: int  # 0, 1, 2


@dataclass(frozen=True)
class Param:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Sum:
    terms: tuple  # signs folded into Neg nodes


@dataclass(frozen=True)
class Prod:
    factors: tuple


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Quot:
    base: object
    denominator: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()+\-*/^]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        self._tokenize()
        self.pos = 0

    def _tokenize(self):
        i = 0
        line, col = 1, 1
        n = len(self.text)
        while i < n:
            ch = self.text[i]
            if ch == "\n":
                line += 1
                col = 1
                i += 1
                continue
            if ch.isspace():
                i += 1
                col += 1
                continue
            m = _TOKEN.match(self.text, i)
            if not m or m.start(m.lastindex) != i:
                raise ExprError(f"unexpected character {ch!r}", line, col)
            tok = m.group(m.lastindex)
            kind = ("num", "ident", "op")[m.lastindex - 1]
            self.tokens.append((kind, tok, line, col))
            col += len(tok)
            i = m.end()
        self.tokens.append(("end", "", line, col))

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message):
        kind, tok, line, col = self.peek()
        raise ExprError(message, line, col)

    def expect_uint(self) -> int:
        kind, tok, line, col = self.peek()
        if kind != "num":
            self.error("expected a nonnegative integer")
        self.next()
        return int(tok)

    # grammar -----------------------------------------------------------
    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self):
        terms = [self.term()]
        while True:
            kind, tok, _, _ = self.peek()
            if kind == "op" and tok in "+-":
                self.next()
                t = self.term()
                terms.append(Neg(t) if tok == "-" else t)
            else:
                break
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def _starts_atom(self) -> bool:
        kind, tok, _, _ = self.peek()
        return kind in ("num", "ident") or (kind == "op" and tok == "(")

    def term(self):
        factors = [self.factor()]
        while True:
            kind, tok, _, _ = self.peek()
            if kind == "op" and tok == "*":
                self.next()
                factors.append(self.factor())
            elif self._starts_atom():  # juxtaposition
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Prod(tuple(factors))

    def factor(self):
        node = self.atom()
        kind, tok, _, _ = self.peek()
        if kind == "op" and tok == "^":
            self.next()
            node = Pow(node, self.expect_uint())
        while True:
            kind, tok, line, col = self.peek()
            if kind == "op" and tok == "/":
                self.next()
                den = self.expect_uint()
                if den == 0:
                    raise ExprError("division by zero", line, col)
                node = Quot(node, den)
            else:
                break
        return node

    def atom(self):
        kind, tok, line, col = self.next()
        if kind == "num":
            return Num(Fraction(int(tok)))
        if kind == "ident":
            idx = LETTERS.find(tok)
            if idx >= 0 and len(tok) == 1:
                return Var(idx)
            return Param(tok)
        if kind == "op" and tok == "(":
            node = self.expr()
            kind, tok, line, col = self.next()
            if tok != ")":
                raise ExprError("expected ')'", line, col)
            return node
        if kind == "op" and tok == "-":
            return Neg(self.atom())
        raise ExprError(f"unexpected {tok!r}", line, col)


def parse_expression(text: str):
    """Parse to an AST; raises ExprError with line/column on bad input."""
    return _Parser(text).parse()


def print_expression(node) -> str:
    """Canonical text; reparsing yields an identical AST."""
    if isinstance(node, Num):
        if node.value < 0:
            return f"-{-node.value}"
        return str(node.value)
    if isinstance(node, Var):
        return LETTERS[node.letter]
    if isinstance(node, Param):
        return node.name
    if isinstance(node, Neg):
        inner = print_expression(node.operand)
        if isinstance(node.operand, (Sum, Neg)):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, Sum):
        parts = []
        for i, t in enumerate(node.terms):
            if i and isinstance(t, Neg):
                parts.append(f" - {_wrap(t.operand, parens=(Sum, Neg))}")
            elif i:
                parts.append(f" + {_wrap(t, parens=(Sum,))}")
            else:
                parts.append(_wrap(t, parens=()))
        return "".join(parts)
    if isinstance(node, Prod):
        return "*".join(_wrap(f, parens=(Sum, Neg)) for f in node.factors)
    if isinstance(node, Pow):
        return f"{_wrap(node.base, parens=(Sum, Neg, Prod, Pow, Quot))}^{node.exponent}"
    if isinstance(node, Quot):
        return f"{_wrap(node.base, parens=(Sum, Neg, Prod))}/{node.denominator}"
    raise TypeError(f"not an expression node: {node!r}")


def _wrap(node, parens) -> str:
    text = print_expression(node)
    return f"({text})" if isinstance(node, parens) else text


def free_parameters(node) -> set:
    if isinstance(node, Param):
        return {node.name}
    if isinstance(node, Neg):
        return free_parameters(node.operand)
    if isinstance(node, (Pow, Quot)):
        return free_parameters(node.base)
    if isinstance(node, (Sum, Prod)):
        out = set()
        for child in node.terms if isinstance(node, Sum) else node.factors:
            out |= free_parameters(child)
        return out
    return set()


def lower_ncpoly(node, bindings=None) -> NCPoly:
    """Evaluate the AST in the free algebra, substituting parameters."""
    bindings = bindings or {}
    if isinstance(node, Num):
        return NCPoly.scalar(node.value)
    if isinstance(node, Var):
        return NCPoly.variable(node.letter)
    if isinstance(node, Param):
        if node.name not in bindings:
            raise ValueError(f"unbound parameter {node.name!r}")
        return NCPoly.scalar(as_fraction(bindings[node.name]))
    if isinstance(node, Neg):
        return -lower_ncpoly(node.operand, bindings)
    if isinstance(node, Sum):
        out = NCPoly.zero()
        for t in node.terms:
            out = out + lower_ncpoly(t, bindings)
        return out
    if isinstance(node, Prod):
        out = NCPoly.one()
        for f in node.factors:  # order preserved: noncommutative
            out = out * lower_ncpoly(f, bindings)
        return out
    if isinstance(node, Pow):
        return lower_ncpoly(node.base, bindings) ** node.exponent
    if isinstance(node, Quot):
        return lower_ncpoly(node.base, bindings) / node.denominator
    raise TypeError(f"not an expression node: {node!r}")


def lower_potential(node, bindings=None) -> Potential:
    return Potential.from_ncpoly(lower_ncpoly(node, bindings))


def lower_commpoly(node, bindings=None):
    from .ncalg import abelianize

    return abelianize(lower_ncpoly(node, bindings))

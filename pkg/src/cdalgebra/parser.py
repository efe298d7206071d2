"""Element literals and the expression grammar behind the CLI.

Element literals are signed linear combinations like "1 + 2e1 - 3/2e11";
i, j, k are aliases for e1, e2, e3 and e0 for the scalar unit.  Expressions
add parentheses, products, integer powers, and conj/inv/norm/re/im.  Rational
literals keep the whole expression exact; a decimal literal anywhere switches
it to floats, and mixing the two styles is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import (EXACT, FLOAT, Element, basis_element, conjugate, im,
                   inverse, make_element, multiply, norm, pow_element,
                   rational, re, scalar_element)

_FUNCS = ("conj", "inv", "norm", "re", "im")
_ALIASES = {"i": 1, "j": 2, "k": 3}


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


@dataclass(frozen=True)
class Token:
    kind: str  # INT DEC BASIS NAME + - * / ^ ( ) END
    pos: int
    value: object = None


def tokenize(text: str) -> list[Token]:
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/^()":
            out.append(Token(ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i < n and text[i] == "." and i + 1 < n and text[i + 1].isdigit():
                i += 1
                while i < n and text[i].isdigit():
                    i += 1
                out.append(Token("DEC", start, float(text[start:i])))
            else:
                out.append(Token("INT", start, int(text[start:i])))
            continue
        if ch.isalpha():
            start = i
            while i < n and text[i].isalpha():
                i += 1
            word = text[start:i]
            if word == "e":
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                if i == dstart:
                    raise ParseError("expected a basis index after 'e'", start)
                out.append(Token("BASIS", start, int(text[dstart:i])))
            elif word in _ALIASES:
                out.append(Token("BASIS", start, _ALIASES[word]))
            elif word in _FUNCS:
                out.append(Token("NAME", start, word))
            else:
                raise ParseError(f"unknown symbol {word!r}", start)
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(Token("END", n))
    return out


# -- abstract syntax -----------------------------------------------------------

@dataclass(frozen=True)
class Literal:
    value: object  # int, exact rational, or float
    pos: int


@dataclass(frozen=True)
class Basis:
    index: int
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Conj:
    arg: "Expr"


@dataclass(frozen=True)
class Inv:
    arg: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Norm:
    arg: "Expr"


@dataclass(frozen=True)
class Re:
    arg: "Expr"


@dataclass(frozen=True)
class Im:
    arg: "Expr"


Expr = Union[Literal, Basis, Neg, Add, Sub, Mul, Conj, Inv, Pow, Norm, Re, Im]

_FUNC_NODES = {"conj": Conj, "inv": Inv, "norm": Norm, "re": Re, "im": Im}


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.idx = 0
        self.max_basis = 0
        self.has_decimal = False
        self.has_rational = False
        self.has_norm = False
        self._decimal_pos: Optional[int] = None
        self._rational_pos: Optional[int] = None

    def peek(self) -> Token:
        return self.tokens[self.idx]

    def advance(self) -> Token:
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}", tok.pos)
        return self.advance()

    def _mark_decimal(self, pos: int) -> None:
        self.has_decimal = True
        self._decimal_pos = pos
        if self.has_rational:
            raise ParseError("mixed exact (p/q) and decimal literals", pos)

    def _mark_rational(self, pos: int) -> None:
        self.has_rational = True
        self._rational_pos = pos
        if self.has_decimal:
            raise ParseError("mixed exact (p/q) and decimal literals", pos)

    def _number(self) -> Literal:
        tok = self.advance()
        if tok.kind == "DEC":
            self._mark_decimal(tok.pos)
            return Literal(tok.value, tok.pos)
        if self.peek().kind == "/":
            self.advance()
            den = self.expect("INT")
            if den.value == 0:
                raise ParseError("zero denominator", den.pos)
            self._mark_rational(tok.pos)
            return Literal(rational(tok.value, den.value), tok.pos)
        return Literal(tok.value, tok.pos)

    def _basis(self) -> Basis:
        tok = self.advance()
        self.max_basis = max(self.max_basis, tok.value)
        return Basis(tok.value, tok.pos)

    # expression grammar

    def parse_expression(self) -> Expr:
        node = self._expr()
        end = self.peek()
        if end.kind != "END":
            raise ParseError("trailing input", end.pos)
        return node

    def _expr(self) -> Expr:
        node = self._term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self._term()
            node = Add(node, rhs) if op.kind == "+" else Sub(node, rhs)
        return node

    def _term(self) -> Expr:
        node = self._factor()
        while self.peek().kind == "*":
            self.advance()
            node = Mul(node, self._factor())
        return node

    def _factor(self) -> Expr:
        if self.peek().kind == "-":
            self.advance()
            return Neg(self._factor())
        return self._power()

    def _power(self) -> Expr:
        node = self._atom()
        while self.peek().kind == "^":
            self.advance()
            sign = 1
            if self.peek().kind == "-":
                self.advance()
                sign = -1
            k = self.expect("INT")
            node = Pow(node, sign * k.value)
        return node

    def _atom(self) -> Expr:
        tok = self.peek()
        if tok.kind in ("INT", "DEC"):
            lit = self._number()
            if self.peek().kind == "BASIS":
                return Mul(lit, self._basis())
            return lit
        if tok.kind == "BASIS":
            return self._basis()
        if tok.kind == "NAME":
            self.advance()
            if tok.value == "norm":
                self.has_norm = True
            self.expect("(")
            inner = self._expr()
            self.expect(")")
            return _FUNC_NODES[tok.value](inner)
        if tok.kind == "(":
            self.advance()
            inner = self._expr()
            self.expect(")")
            return inner
        raise ParseError("expected a term", tok.pos)

    # flat element-literal grammar: [sign] term ((+|-) term)*

    def parse_element_terms(self) -> list[tuple[int, object, Optional[int], int]]:
        terms = []
        sign = 1
        tok = self.peek()
        if tok.kind in ("+", "-"):
            self.advance()
            sign = -1 if tok.kind == "-" else 1
        terms.append(self._element_term(sign))
        while self.peek().kind != "END":
            op = self.peek()
            if op.kind not in ("+", "-"):
                raise ParseError("expected '+' or '-' between terms", op.pos)
            self.advance()
            terms.append(self._element_term(-1 if op.kind == "-" else 1))
        return terms

    def _element_term(self, sign: int):
        tok = self.peek()
        if tok.kind in ("INT", "DEC"):
            lit = self._number()
            idx = None
            if self.peek().kind == "BASIS":
                idx = self._basis().index
            return (sign, lit.value, idx, lit.pos)
        if tok.kind == "BASIS":
            b = self._basis()
            return (sign, 1, b.index, b.pos)
        raise ParseError("expected a term", tok.pos)


def _resolve_level(max_index: int, level: Optional[int], pos: int = 0) -> int:
    inferred = max_index.bit_length()
    if level is None:
        return inferred
    if max_index >= (1 << level):
        raise ParseError(f"basis index {max_index} out of range at level {level}", pos)
    return level


def parse_element(text: str, level: Optional[int] = None) -> Element:
    """Parse a signed linear combination of basis units into an Element.

    The level is inferred as the smallest one covering the largest basis
    index unless given explicitly.  Repeated terms accumulate.
    """
    p = _Parser(text)
    terms = p.parse_element_terms()
    lvl = _resolve_level(p.max_basis, level,
                         max((t[3] for t in terms), default=0))
    n = 1 << lvl
    backend = FLOAT if p.has_decimal else EXACT
    coeffs = [0.0] * n if backend == FLOAT else [0] * n
    for sign, value, idx, _pos in terms:
        if backend == FLOAT:
            value = float(value)
        i = idx or 0
        coeffs[i] = coeffs[i] + (value if sign > 0 else -value)
    return make_element(lvl, coeffs)


def parse_expression(text: str) -> Expr:
    return _Parser(text).parse_expression()


def eval_expression(text: str, level: Optional[int] = None,
                    backend: Optional[str] = None) -> Element:
    """Parse and evaluate an expression against the core arithmetic.

    Decimal literals (or a norm() call, whose value is a float) force the
    float backend; an explicit backend="exact" then raises.
    """
    p = _Parser(text)
    tree = p.parse_expression()
    lvl = _resolve_level(p.max_basis, level)
    needs_float = p.has_decimal or p.has_norm
    if backend is None:
        backend = FLOAT if needs_float else EXACT
    elif backend == EXACT and needs_float:
        raise ValueError("decimal literals and norm() force the float backend")
    return _eval(tree, lvl, backend)


def _eval(node: Expr, level: int, backend: str) -> Element:
    if isinstance(node, Literal):
        v = float(node.value) if backend == FLOAT else node.value
        return scalar_element(level, v)
    if isinstance(node, Basis):
        return basis_element(level, node.index, backend)
    if isinstance(node, Neg):
        return -_eval(node.arg, level, backend)
    if isinstance(node, Add):
        return _eval(node.left, level, backend) + _eval(node.right, level, backend)
    if isinstance(node, Sub):
        return _eval(node.left, level, backend) - _eval(node.right, level, backend)
    if isinstance(node, Mul):
        return multiply(_eval(node.left, level, backend), _eval(node.right, level, backend))
    if isinstance(node, Conj):
        return conjugate(_eval(node.arg, level, backend))
    if isinstance(node, Inv):
        return inverse(_eval(node.arg, level, backend))
    if isinstance(node, Pow):
        return pow_element(_eval(node.base, level, backend), node.exponent)
    if isinstance(node, Norm):
        return scalar_element(level, norm(_eval(node.arg, level, backend)))
    if isinstance(node, Re):
        return scalar_element(level, re(_eval(node.arg, level, backend)))
    if isinstance(node, Im):
        return im(_eval(node.arg, level, backend))
    raise TypeError(f"unknown node {node!r}")

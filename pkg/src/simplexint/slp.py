"""Single-intermediate-use straight-line programs as fully parenthesized expressions.

Grammar (whitespace is ignored)::

    expr     := rational | var | "(" expr ("+" | "*") expr ")"
    var      := "x" <index in 1..n>
    rational := ["-"] digits ["/" digits]

Because every node is a tree node, no intermediate result can be reused;
that structural fact is the single-use restriction.  Variables may appear
any number of times.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .arith import format_rational
from .errors import ExpressionSyntaxError, FormalDegreeExceeded
from .polynomial import SparsePolynomial


@dataclass(frozen=True)
class Constant:
    value: Fraction


@dataclass(frozen=True)
class Variable:
    index: int  # 1-based


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"


Expr = Union[Constant, Variable, Sum, Product]


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.text = text
        self.nvars = nvars
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ExpressionSyntaxError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ExpressionSyntaxError("expected digits", self.pos)
        return self.text[start:self.pos]

    def parse(self) -> Expr:
        e = self.expr()
        self.skip()
        if self.pos != len(self.text):
            raise ExpressionSyntaxError("trailing input", self.pos)
        return e

    def expr(self) -> Expr:
        # open parentheses awaiting operands: [left, op]
        pending: list[list] = []
        while True:
            if self.peek() == "(":
                self.pos += 1
                pending.append([None, None])
                continue
            value = self.atom()
            while True:
                if not pending:
                    return value
                frame = pending[-1]
                if frame[0] is None:
                    frame[0] = value
                    op = self.peek()
                    if op not in ("+", "*"):
                        raise ExpressionSyntaxError("expected '+' or '*'", self.pos)
                    self.pos += 1
                    frame[1] = op
                    break
                self.expect(")")
                pending.pop()
                value = Sum(frame[0], value) if frame[1] == "+" else Product(frame[0], value)

    def atom(self) -> Expr:
        ch = self.peek()
        if ch == "x":
            start = self.pos
            self.pos += 1
            idx = int(self.digits())
            if not 1 <= idx <= self.nvars:
                raise ExpressionSyntaxError(f"variable index {idx} out of range 1..{self.nvars}", start)
            return Variable(idx)
        if ch == "-" or ch.isdigit():
            start = self.pos
            neg = ch == "-"
            if neg:
                self.pos += 1
            num = int(self.digits())
            den = 1
            if self.pos < len(self.text) and self.text[self.pos] == "/":
                self.pos += 1
                den = int(self.digits())
                if den == 0:
                    raise ExpressionSyntaxError("zero denominator", start)
            return Constant(Fraction(-num if neg else num, den))
        found = repr(ch) if ch else "end of input"
        raise ExpressionSyntaxError(f"unexpected {found}", self.pos)


def parse_expression(text: str, nvars: int) -> Expr:
    """Parse a fully parenthesized +/* expression over x1..x{nvars}."""
    return _Parser(text, nvars).parse()


def render(e: Expr) -> str:
    """Canonical text; ``parse_expression(render(e), n) == e``."""
    text: dict[int, str] = {}
    for node in _postorder(e):
        if isinstance(node, Constant):
            s = format_rational(node.value)
        elif isinstance(node, Variable):
            s = f"x{node.index}"
        else:
            op = "+" if isinstance(node, Sum) else "*"
            s = f"({text[id(node.left)]}{op}{text[id(node.right)]})"
        text[id(node)] = s
    return text[id(e)]


def formal_degree(e: Expr) -> int:
    # explicit stack: deep left-leaning chains would overflow recursion
    out: dict[int, int] = {}
    stack = [(e, False)]
    while stack:
        node, ready = stack.pop()
        if isinstance(node, Constant):
            out[id(node)] = 0
        elif isinstance(node, Variable):
            out[id(node)] = 1
        elif not ready:
            stack.append((node, True))
            stack.append((node.left, False))
            stack.append((node.right, False))
        else:
            a, b = out[id(node.left)], out[id(node.right)]
            out[id(node)] = max(a, b) if isinstance(node, Sum) else a + b
    return out[id(e)]


def _postorder(e: Expr):
    stack = [(e, False)]
    while stack:
        node, ready = stack.pop()
        if isinstance(node, (Constant, Variable)) or ready:
            yield node
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))


def evaluate(e: Expr, point: Sequence) -> Fraction:
    """Node-by-node evaluation at a rational point."""
    vals: dict[int, Fraction] = {}
    for node in _postorder(e):
        if isinstance(node, Constant):
            v = node.value
        elif isinstance(node, Variable):
            v = Fraction(point[node.index - 1])
        elif isinstance(node, Sum):
            v = vals[id(node.left)] + vals[id(node.right)]
        else:
            v = vals[id(node.left)] * vals[id(node.right)]
        vals[id(node)] = v
    return vals[id(e)]


def expand_slp(e: Expr, degree_cap: int, nvars: int) -> SparsePolynomial:
    """Execute the program into sparse form; refuses if formal degree > cap."""
    deg = formal_degree(e)
    if deg > degree_cap:
        raise FormalDegreeExceeded(f"formal degree {deg} exceeds the cap {degree_cap}")
    vals: dict[int, SparsePolynomial] = {}
    for node in _postorder(e):
        if isinstance(node, Constant):
            v = SparsePolynomial.constant(nvars, node.value)
        elif isinstance(node, Variable):
            v = SparsePolynomial.variable(nvars, node.index)
        elif isinstance(node, Sum):
            v = vals[id(node.left)] + vals[id(node.right)]
        else:
            v = vals[id(node.left)] * vals[id(node.right)]
        vals[id(node)] = v
    return vals[id(e)]


def from_polynomial(f: SparsePolynomial) -> Expr:
    """Encode a sparse polynomial as an expression (sum of coefficient*monomial)."""
    terms: list[Expr] = []
    for exps, c in sorted(f.terms.items()):
        node: Expr = Constant(c)
        for k, ek in enumerate(exps):
            for _ in range(ek):
                node = Product(node, Variable(k + 1))
        terms.append(node)
    if not terms:
        return Constant(Fraction(0))
    out = terms[0]
    for t in terms[1:]:
        out = Sum(out, t)
    return out

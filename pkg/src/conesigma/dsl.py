"""A small expression language for cone matrices.

Grammar (``*`` binds tighter than ``+``, both left-associative)::

    expr    := term ('+' term)*
    term    := factor ('*' factor)*
    factor  := NUMBER                      scalar c, meaning c*I
             | 'alpha' | 'beta' | 'I'
             | ('Ibar' | 'In') '(' INT ')'
             | 'E' '(' INT ',' INT ')'
             | ('phi' | 'T') '(' expr ')'
             | '{' [ '(' INT ',' INT ')' ':' NUMBER (',' ...)* ] '}'
             | '(' expr ')'

Indices are 0-based: ``E(0,0)`` is the matrix unit in the top-left corner,
``In(n)`` has ones at ``(0,0) .. (n-1,n-1)`` and ``Ibar(n) = I - In(n)``.
Numbers are integers or fractions ``a/b``.
"""
from __future__ import annotations

import csv
import io
import json
import os
import re
from dataclasses import dataclass, field

from .coeff import QQ
from .cone import (
    ConeMat, cone_add, cone_from_finite, cone_identity, cone_mul, cone_scalar,
    cone_transpose, ibar, pairing_shifts, phi_map, window_render,
)
from .errors import BudgetExceeded, DSLSyntaxError, UnknownIdentifier
from .finmat import E, FinMat, I
from .pairing import CANTOR

__all__ = [
    "Node", "Sym", "Call", "Apply", "Literal", "Scalar", "Add", "Mul",
    "parse_expr", "pretty", "evaluate", "render_window", "max_window",
]


@dataclass(frozen=True)
class Node:
    pos: tuple[int, int] = field(default=(1, 1), compare=False, repr=False, kw_only=True)


@dataclass(frozen=True)
class Sym(Node):
    name: str


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: tuple[int, ...]


@dataclass(frozen=True)
class Apply(Node):
    name: str
    arg: Node


@dataclass(frozen=True)
class Literal(Node):
    entries: tuple[tuple[tuple[int, int], str], ...]


@dataclass(frozen=True)
class Scalar(Node):
    text: str


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Mul(Node):
    left: Node
    right: Node


SYMBOLS = {"alpha", "beta", "I"}
INDEXED = {"Ibar": 1, "In": 1, "E": 2}
UNARY = {"phi", "T"}

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<num>-?\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[+*(),{}:])"
)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[_Tok]:
    toks, pos, line, line_start = [], 0, 1, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise DSLSyntaxError(f"unexpected character {src[pos]!r}", line, pos - line_start + 1)
        kind, text = m.lastgroup, m.group()
        if kind == "ws":
            for k, ch in enumerate(text):
                if ch == "\n":
                    line, line_start = line + 1, pos + k + 1
        else:
            toks.append(_Tok(kind, text, line, pos - line_start + 1))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, src):
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return DSLSyntaxError(msg, tok.line, tok.col)

    def advance(self):
        t = self.tok
        self.i += 1
        return t

    def expect(self, text, what=None):
        if self.tok.text != text or self.tok.kind not in ("op",):
            found = "end of input" if self.tok.kind == "eof" else repr(self.tok.text)
            raise self.error(f"expected {what or repr(text)}, found {found}")
        return self.advance()

    def natural(self):
        t = self.tok
        if t.kind != "num" or not t.text.isdigit():
            raise self.error("expected a natural number")
        self.advance()
        return int(t.text)

    def parse(self):
        node = self.expr()
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text == "+":
            t = self.advance()
            node = Add(node, self.term(), pos=(t.line, t.col))
        return node

    def term(self):
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text == "*":
            t = self.advance()
            node = Mul(node, self.factor(), pos=(t.line, t.col))
        return node

    def factor(self):
        t = self.tok
        pos = (t.line, t.col)
        if t.kind == "num":
            self.advance()
            return Scalar(t.text, pos=pos)
        if t.kind == "ident":
            self.advance()
            if t.text in SYMBOLS:
                return Sym(t.text, pos=pos)
            if t.text in INDEXED:
                self.expect("(", f"'(' after {t.text}")
                args = [self.natural()]
                for _ in range(INDEXED[t.text] - 1):
                    self.expect(",")
                    args.append(self.natural())
                self.expect(")", f"')' closing {t.text}(")
                return Call(t.text, tuple(args), pos=pos)
            if t.text in UNARY:
                self.expect("(", f"'(' after {t.text}")
                arg = self.expr()
                self.expect(")", f"')' closing {t.text}(")
                return Apply(t.text, arg, pos=pos)
            raise UnknownIdentifier(f"unknown identifier {t.text!r}", t.line, t.col)
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")", "')' closing parenthesis")
            return node
        if t.kind == "op" and t.text == "{":
            return self.literal()
        if t.kind == "eof":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {t.text!r}")

    def literal(self):
        start = self.advance()
        entries = []
        if not (self.tok.kind == "op" and self.tok.text == "}"):
            while True:
                self.expect("(", "'(' opening an index pair")
                i = self.natural()
                self.expect(",")
                j = self.natural()
                self.expect(")")
                self.expect(":")
                if self.tok.kind != "num":
                    raise self.error("expected a number")
                entries.append(((i, j), self.advance().text))
                if self.tok.kind == "op" and self.tok.text == ",":
                    self.advance()
                    continue
                break
        self.expect("}", "'}' closing the literal")
        return Literal(tuple(entries), pos=(start.line, start.col))


def parse_expr(src: str) -> Node:
    return _Parser(src).parse()


def pretty(node: Node) -> str:
    """Canonical source text; ``parse_expr(pretty(n)) == n``."""
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Scalar):
        return node.text
    if isinstance(node, Call):
        return f"{node.name}({','.join(map(str, node.args))})"
    if isinstance(node, Apply):
        return f"{node.name}({pretty(node.arg)})"
    if isinstance(node, Literal):
        return "{" + ", ".join(f"({i},{j}):{v}" for (i, j), v in node.entries) + "}"
    if isinstance(node, Add):
        right = pretty(node.right)
        if isinstance(node.right, Add):
            right = f"({right})"
        return f"{pretty(node.left)} + {right}"
    if isinstance(node, Mul):
        left, right = pretty(node.left), pretty(node.right)
        if isinstance(node.left, Add):
            left = f"({left})"
        if isinstance(node.right, (Add, Mul)):
            right = f"({right})"
        return f"{left} * {right}"
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: Node, ring=QQ, pairing=CANTOR) -> ConeMat:
    if isinstance(node, Sym):
        if node.name == "I":
            return cone_identity(ring)
        alpha, beta = pairing_shifts(ring, pairing)
        return alpha if node.name == "alpha" else beta
    if isinstance(node, Scalar):
        return cone_scalar(ring.parse(node.text), ring)
    if isinstance(node, Call):
        if node.name == "Ibar":
            return ibar(node.args[0], ring)
        if node.name == "In":
            return cone_from_finite(I(node.args[0], ring))
        return cone_from_finite(E(*node.args, ring))
    if isinstance(node, Literal):
        F = FinMat(ring, {ij: ring.parse(v) for ij, v in node.entries})
        return cone_from_finite(F)
    if isinstance(node, Apply):
        inner = evaluate(node.arg, ring, pairing)
        return phi_map(inner, pairing) if node.name == "phi" else cone_transpose(inner)
    if isinstance(node, Add):
        return cone_add(evaluate(node.left, ring, pairing), evaluate(node.right, ring, pairing))
    if isinstance(node, Mul):
        return cone_mul(evaluate(node.left, ring, pairing), evaluate(node.right, ring, pairing))
    raise TypeError(f"not an expression node: {node!r}")


def max_window() -> int:
    return int(os.environ.get("CONESIGMA_MAX_WINDOW", "1024"))


def render_window(expr, n: int, fmt: str = "json", ring=QQ) -> str:
    """Evaluate ``expr`` (source text or AST) and serialize its ``n x n`` window.

    JSON lists nonzero entries in row-major order as ``[i, j, "value"]``;
    CSV is the dense block, one line per row.
    """
    if n > max_window():
        raise BudgetExceeded(f"window {n} exceeds the maximum {max_window()} (CONESIGMA_MAX_WINDOW)")
    node = parse_expr(expr) if isinstance(expr, str) else expr
    A = evaluate(node, ring)
    block = window_render(A, range(n), range(n))
    if fmt == "json":
        entries = [
            [i, j, ring.format(v)]
            for i, row in enumerate(block) for j, v in enumerate(row) if not ring.is_zero(v)
        ]
        return json.dumps({"rows": n, "cols": n, "entries": entries}) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in block:
            writer.writerow([ring.format(v) for v in row])
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")

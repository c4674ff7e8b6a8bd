"""Recursive-descent parser for the ASCII polynomial grammar.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' factor) | ('/' INT))*
    factor := ('+' | '-') factor | power
    power  := atom ('^' INT)?
    atom   := INT | 'x' INT | '(' expr ')'

``^`` binds tightest, then ``*``/``/``, then ``+``/``-``.  Juxtaposition is
rejected.  Division is only by an integer literal, so printed rational
coefficients such as ``1/2*x1`` read back unchanged.
"""

from __future__ import annotations

import re

from .algebra import QQ, Polynomial, as_field

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x(?P<idx>\d+))|(?P<op>[-+*/^()]))")


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


def _tokenize(text: str):
    pos = 0
    tokens = []
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m:
            bad = pos + len(stripped[pos:]) - len(stripped[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {stripped[bad]!r}", text, bad)
        start = m.start(m.lastgroup if m.lastgroup != "idx" else "var")
        if m.group("int") is not None:
            tokens.append(("int", int(m.group("int")), start))
        elif m.group("var") is not None:
            tokens.append(("var", int(m.group("idx")), start))
        else:
            tokens.append((m.group("op"), None, start))
        pos = m.end()
    tokens.append(("end", None, len(stripped)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int, field):
        self.text = text
        self.n = n
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0

    @staticmethod
    def _show(tok) -> str:
        kind, value, _ = tok
        if kind == "end":
            return "end of input"
        if kind == "var":
            return repr(f"x{value}")
        return repr(str(value) if kind == "int" else kind)

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = self._show(tok)
            raise PolynomialSyntaxError(f"expected {kind}, found {what}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise PolynomialSyntaxError("empty input", self.text, 0)
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolynomialSyntaxError(f"unexpected token {self._show(tok)}", self.text, tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in "+-" and self.peek()[0] != "end":
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            if op == "*":
                value = value * self.factor()
            else:
                tok = self.take("int")
                if tok[1] == 0:
                    raise PolynomialSyntaxError("division by zero", self.text, tok[2])
                value = value.scalar_mul(self.field.inv(self.field(tok[1])))
        return value

    def factor(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.factor()
        if kind == "+":
            self.take()
            return self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            exp = self.take("int")[1]
            return base ** exp
        return base

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            return Polynomial.constant(value, self.n, self.field)
        if kind == "var":
            self.take()
            if not 1 <= value <= self.n:
                raise PolynomialSyntaxError(f"variable x{value} outside x1..x{self.n}", self.text, pos)
            return Polynomial.variable(value, self.n, self.field)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = self._show(self.peek())
        raise PolynomialSyntaxError(f"unexpected {what}", self.text, pos)


def parse_polynomial(text: str, n: int, field=QQ) -> Polynomial:
    return _Parser(text, n, as_field(field)).parse()


def infer_nvars(texts) -> int:
    """Largest variable index mentioned in a collection of polynomial strings."""
    found = [int(m) for t in texts for m in re.findall(r"x(\d+)", t)]
    return max(found, default=1)

"""Polynomial system files and benchmark families.

File format::

    # comment
    vars: x y z
    order: degrevlex
    x^2 + 1/2*x*y - 3
    ...

The header lines may come in either order; every following non-empty line is
one polynomial.  Terms are built from integers, ``a/b`` rationals, variables,
``*``, ``^`` with a non-negative integer exponent, ``+``/``-`` and parentheses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .ordering import DEGREVLEX, get_order
from .poly import Polynomial, VariableContext


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            where += ": "
        super().__init__(where + message)


@dataclass
class PolynomialSystem:
    name: str
    ctx: VariableContext
    order: object
    polys: list

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def with_order(self, order):
        order = get_order(order)
        return PolynomialSystem(self.name, self.ctx, order, [f.with_order(order) for f in self.polys])


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


class _Parser:
    def __init__(self, text, ctx, order, line):
        self.text = text
        self.ctx = ctx
        self.order = order
        self.line = line
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
                raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind) + 1))
            pos = m.end()
        self.k = 0

    def error(self, msg, tok=None):
        if tok is None:
            tok = self.peek()
        col = tok[2] if tok else len(self.text.rstrip()) + 1
        raise ParseError(msg, self.line, col)

    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input")
        self.k += 1
        return tok

    def at(self, op):
        tok = self.peek()
        return tok is not None and tok[0] == "op" and tok[1] == op

    def parse(self):
        if not self.tokens:
            self.error("empty polynomial")
        p = self.expr()
        if self.peek() is not None:
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        sign = 1
        if self.at("+") or self.at("-"):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term().scale(sign)
        while self.at("+") or self.at("-"):
            sign = -1 if self.take()[1] == "-" else 1
            acc = acc + self.term().scale(sign)
        return acc

    def term(self):
        acc = self.factor()
        while self.at("*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def exponent(self):
        if not self.at("^"):
            return None
        self.take()
        tok = self.take()
        if tok[0] != "num":
            self.error("exponent must be a non-negative integer", tok)
        return int(tok[1])

    def factor(self):
        tok = self.take()
        kind, val, col = tok
        if kind == "num":
            value = Fraction(int(val))
            if self.at("/"):
                self.take()
                den = self.take()
                if den[0] != "num":
                    self.error("denominator must be an integer", den)
                if int(den[1]) == 0:
                    self.error("zero denominator", den)
                value = value / int(den[1])
            base = Polynomial.constant(self.ctx, value, self.order)
        elif kind == "name":
            if val not in self.ctx._index:
                self.error(f"unknown variable {val!r}", tok)
            base = Polynomial.variable(self.ctx, val, self.order)
        elif val == "(":
            base = self.expr()
            if not self.at(")"):
                self.error("expected ')'")
            self.take()
        else:
            self.error(f"unexpected {val!r}", tok)
        e = self.exponent()
        return base if e is None else base**e


def parse_polynomial(text, ctx, order=DEGREVLEX, line=None):
    if not isinstance(ctx, VariableContext):
        ctx = VariableContext(ctx)
    return _Parser(text, ctx, get_order(order), line).parse()


def parse_system(text, name="system"):
    """Parse a system file; returns a :class:`PolynomialSystem`."""
    ctx = None
    order = None
    polys = []
    pending = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        key = head.strip().lower()
        if _ and key in ("vars", "order"):
            if key == "vars":
                if ctx is not None:
                    raise ParseError("duplicate 'vars' line", lineno)
                names = rest.replace(",", " ").split()
                for nm in names:
                    if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", nm):
                        raise ParseError(f"bad variable name {nm!r}", lineno)
                try:
                    ctx = VariableContext(names)
                except ValueError as exc:
                    raise ParseError(str(exc), lineno) from None
            else:
                if order is not None:
                    raise ParseError("duplicate 'order' line", lineno)
                try:
                    order = get_order(rest.strip())
                except ValueError as exc:
                    raise ParseError(str(exc), lineno) from None
            continue
        pending.append((lineno, line))
    if ctx is None:
        raise ParseError("missing 'vars:' header")
    order = order or DEGREVLEX
    for lineno, line in pending:
        polys.append(parse_polynomial(line, ctx, order, lineno))
    return PolynomialSystem(name, ctx, order, polys)


def format_system(system):
    lines = [f"vars: {' '.join(system.ctx.names)}", f"order: {system.order.name}"]
    lines += [str(f) for f in system.polys]
    return "\n".join(lines) + "\n"


def read_system(path):
    from pathlib import Path

    path = Path(path)
    # utf-8-sig tolerates a BOM; universal newlines handle CRLF
    return parse_system(path.read_text(encoding="utf-8-sig"), name=path.stem)


def generate_cyclic(n, order=DEGREVLEX):
    """The cyclic-``n`` system in variables ``x1..xn``.

    ``f_k = sum_{i=0}^{n-1} prod_{j=i}^{i+k-1} x_{j mod n}`` for ``k < n`` and
    ``f_n = x1*...*xn - 1``.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError("cyclic-n needs n >= 2")
    ctx = VariableContext([f"x{i}" for i in range(1, n + 1)])
    order = get_order(order)
    polys = []
    for k in range(1, n):
        terms = {}
        for i in range(n):
            m = [0] * n
            for j in range(i, i + k):
                m[j % n] += 1
            m = tuple(m)
            terms[m] = terms.get(m, 0) + 1
        polys.append(Polynomial(ctx, terms, order))
    polys.append(Polynomial(ctx, {(1,) * n: 1, ctx.one(): -1}, order))
    return PolynomialSystem(f"cyclic{n}", ctx, order, polys)


def generate(spec, order=DEGREVLEX):
    """Build a generated system from a ``family:n`` string (only ``cyclic`` is supported)."""
    family, _, arg = spec.partition(":")
    if family.strip().lower() != "cyclic" or not arg.strip().isdigit():
        raise ValueError(f"unknown generator {spec!r}; expected cyclic:<n>")
    return generate_cyclic(int(arg), order)


def fixture_names():
    files = resources.files("janetbasis").joinpath("data")
    return sorted(p.name[:-4] for p in files.iterdir() if p.name.endswith(".sys"))


def load_fixture(name):
    """Load one of the checked-in benchmark systems (``noon4``, ``katsura5``, ...)."""
    res = resources.files("janetbasis").joinpath("data").joinpath(f"{name}.sys")
    if not res.is_file():
        raise ValueError(f"no fixture named {name!r}; available: {fixture_names()}")
    return parse_system(res.read_text(encoding="utf-8"), name=name)

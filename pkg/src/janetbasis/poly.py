"""Exact multivariate polynomials over the rationals.

A monomial is a tuple of exponents over a fixed :class:`VariableContext`.
Polynomials are immutable and keep their terms sorted in decreasing order
under the ordering they were built with, so the leading term is always the
first one.
"""

from __future__ import annotations

from fractions import Fraction
from operator import add, sub
from typing import NamedTuple

from .ordering import DEGREVLEX, get_order


class Term(NamedTuple):
    coeff: Fraction
    mono: tuple


class VariableContext:
    """Ordered, fixed list of variable names; index ``i`` is the ``i``-th variable."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        if isinstance(names, str):
            names = names.split()
        names = tuple(names)
        if not names:
            raise ValueError("a variable context needs at least one variable")
        if any(not isinstance(n, str) or not n for n in names):
            raise ValueError(f"variable names must be non-empty strings: {names!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names!r}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    @property
    def nvars(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def one(self):
        """The unit monomial."""
        return (0,) * len(self.names)

    def var_monomial(self, i):
        m = [0] * len(self.names)
        m[i] = 1
        return tuple(m)

    def monomial(self, **exps):
        m = [0] * len(self.names)
        for name, e in exps.items():
            m[self.index(name)] = e
        return tuple(m)

    def format_monomial(self, m):
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __eq__(self, other):
        return isinstance(other, VariableContext) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VariableContext({list(self.names)!r})"


# ---------- monomial arithmetic ----------


def _check(u, v):
    if len(u) != len(v):
        raise ValueError(f"monomials from different contexts: {u!r}, {v!r}")


def monomial_divides(u, v):
    """True iff ``u`` divides ``v`` (componentwise ``<=``)."""
    _check(u, v)
    return all(a <= b for a, b in zip(u, v))


def proper_divides(u, v):
    """Proper conventional division: ``u | v`` and ``u != v``."""
    return u != v and monomial_divides(u, v)


def monomial_lcm(u, v):
    _check(u, v)
    return tuple(map(max, u, v))


def monomial_mul(u, v):
    _check(u, v)
    return tuple(map(add, u, v))


def monomial_quotient(v, u):
    """Return ``v / u``; ``u`` must divide ``v``."""
    _check(u, v)
    q = tuple(map(sub, v, u))
    if any(e < 0 for e in q):
        raise ValueError(f"{u!r} does not divide {v!r}")
    return q


def monomial_degree(m):
    return sum(m)


# ---------- polynomials ----------


def _as_coeff(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
        # strings like "1/3" are fine, floats are not exact enough
        if isinstance(c, str):
            return Fraction(c)
        raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")
    return Fraction(c)


class Polynomial:
    """Polynomial with exact rational coefficients.

    ``terms`` is a tuple of :class:`Term` strictly decreasing under ``order``;
    the zero polynomial has no terms.
    """

    __slots__ = ("ctx", "order", "terms", "_hash")

    def __init__(self, ctx, terms=(), order=DEGREVLEX):
        if not isinstance(ctx, VariableContext):
            ctx = VariableContext(ctx)
        order = get_order(order)
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = ((m, c) for c, m in terms)
        n = len(ctx)
        acc = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != n or any((not isinstance(e, int)) or e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m!r} for {n} variables")
            acc[m] = acc.get(m, 0) + _as_coeff(c)
        self.ctx = ctx
        self.order = order
        self.terms = tuple(
            Term(c, m) for m, c in sorted(acc.items(), key=lambda mc: order.rkey(mc[0])) if c
        )
        self._hash = None

    @classmethod
    def _make(cls, ctx, order, terms):
        """Wrap an already sorted, zero-free tuple of terms."""
        p = object.__new__(cls)
        p.ctx = ctx
        p.order = order
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def _from_dict(cls, ctx, order, d):
        rkey = order.rkey
        return cls._make(
            ctx, order, tuple(Term(d[m], m) for m in sorted(d, key=rkey))
        )

    @classmethod
    def zero(cls, ctx, order=DEGREVLEX):
        return cls(ctx, (), order)

    @classmethod
    def constant(cls, ctx, c, order=DEGREVLEX):
        if not isinstance(ctx, VariableContext):
            ctx = VariableContext(ctx)
        return cls(ctx, {ctx.one(): c}, order)

    @classmethod
    def variable(cls, ctx, name, order=DEGREVLEX):
        if not isinstance(ctx, VariableContext):
            ctx = VariableContext(ctx)
        return cls(ctx, {ctx.var_monomial(ctx.index(name)): 1}, order)

    # -- basic queries --

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def lm(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return self.terms[0].mono

    @property
    def lc(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.terms[0].coeff

    @property
    def lt(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0]

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(t.mono) for t in self.terms), default=-1)

    def monomials(self):
        return [t.mono for t in self.terms]

    def as_dict(self):
        return {t.mono: t.coeff for t in self.terms}

    def coeff(self, mono):
        for t in self.terms:
            if t.mono == mono:
                return t.coeff
        return Fraction(0)

    # -- arithmetic --

    def _compatible(self, other):
        if self.ctx != other.ctx:
            raise ValueError("polynomials from different variable contexts")
        if self.order is not other.order:
            raise ValueError("polynomials sorted under different orderings")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._compatible(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(self.ctx, other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.as_dict()
        for c, m in other.terms:
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return Polynomial._from_dict(self.ctx, self.order, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(
            self.ctx, self.order, tuple(Term(-c, m) for c, m in self.terms)
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c):
        c = _as_coeff(c)
        if not c:
            return Polynomial._make(self.ctx, self.order, ())
        return Polynomial._make(
            self.ctx, self.order, tuple(Term(a * c, m) for a, m in self.terms)
        )

    def mul_term(self, coeff, mono):
        """Multiply by the term ``coeff * mono``; multiplication preserves the order."""
        coeff = _as_coeff(coeff)
        if not coeff:
            return Polynomial._make(self.ctx, self.order, ())
        if len(mono) != len(self.ctx):
            raise ValueError("monomial from a different context")
        return Polynomial._make(
            self.ctx,
            self.order,
            tuple(Term(a * coeff, tuple(map(add, m, mono))) for a, m in self.terms),
        )

    def mul_var(self, i):
        """Multiply by the ``i``-th variable."""
        terms = []
        for a, m in self.terms:
            m = list(m)
            m[i] += 1
            terms.append(Term(a, tuple(m)))
        return Polynomial._make(self.ctx, self.order, tuple(terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._compatible(other)
        d = {}
        for a, m in self.terms:
            for b, n in other.terms:
                k = tuple(map(add, m, n))
                s = d.get(k, 0) + a * b
                if s:
                    d[k] = s
                else:
                    d.pop(k, None)
        return Polynomial._from_dict(self.ctx, self.order, d)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.ctx, 1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self):
        if not self.terms:
            raise ValueError("cannot make the zero polynomial monic")
        lc = self.terms[0].coeff
        if lc == 1:
            return self
        inv = 1 / lc
        return Polynomial._make(
            self.ctx, self.order, tuple(Term(a * inv, m) for a, m in self.terms)
        )

    def with_order(self, order):
        """Re-sort the terms under another ordering."""
        order = get_order(order)
        if order is self.order:
            return self
        return Polynomial._from_dict(self.ctx, order, self.as_dict())

    # -- comparisons / display --

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return not self.terms
            return len(self.terms) == 1 and self.terms[0] == (other, self.ctx.one())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.names, self.terms))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k, (c, m) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if any(m):
                body = self.ctx.format_monomial(m)
                if a != 1:
                    body = f"{a}*{body}"
            else:
                body = str(a)
            if k == 0:
                out.append(f"-{body}" if sign == "-" else body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, vars={list(self.ctx.names)}, order={self.order.name!r})"


def leading_term(f):
    return f.lt


def leading_monomial(f):
    return f.lm


def leading_coeff(f):
    return f.lc


def reduce_step(h, g, t):
    """Return ``h - g * t / LT(g)``.

    ``t`` is a term of ``h`` (a :class:`Term` or ``(coeff, mono)`` pair) whose
    monomial is divisible by ``LM(g)``; the result no longer contains it.
    """
    coeff, mono = t
    if not g:
        raise ValueError("cannot reduce by the zero polynomial")
    if not monomial_divides(g.lm, mono):
        raise ValueError(
            f"LM(g) = {g.ctx.format_monomial(g.lm)} does not divide "
            f"{h.ctx.format_monomial(mono)}"
        )
    if h.coeff(mono) != coeff:
        raise ValueError("t is not a term of h")
    q = monomial_quotient(mono, g.lm)
    return h - g.mul_term(_as_coeff(coeff) / g.lc, q)


def make_monic(f):
    return f.monic()

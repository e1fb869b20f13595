"""Conventional Groebner basis machinery, kept apart from the Janet engine.

Used to check the involutive algorithms: S-polynomials, conventional normal
forms, a plain Buchberger algorithm returning the reduced basis, and ideal
membership and equality.  Only :func:`verify_involutive_output` reaches into
the engine, for the involutive certificate.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from operator import add, sub

from .poly import Polynomial, Term, monomial_lcm, proper_divides


def _divides(u, v):
    return all(a <= b for a, b in zip(u, v))


def s_polynomial(f, g):
    """``(L/LT(f))*f - (L/LT(g))*g`` with ``L = lcm(LM(f), LM(g))``."""
    if not f or not g:
        raise ValueError("s_polynomial needs nonzero polynomials")
    L = monomial_lcm(f.lm, g.lm)
    a = f.mul_term(1 / f.lc, tuple(map(sub, L, f.lm)))
    b = g.mul_term(1 / g.lc, tuple(map(sub, L, g.lm)))
    return a - b


class _Divisors:
    """Conventional divisor lookup over a list of polynomials (first head that divides)."""

    def __init__(self, G):
        self.G = [g for g in G if g]
        self.heads = [g.lm for g in self.G]
        self._cache = {}

    def find(self, m):
        try:
            return self._cache[m]
        except KeyError:
            pass
        found = None
        for j, u in enumerate(self.heads):
            if _divides(u, m):
                found = j
                break
        self._cache[m] = found
        return found


def _normal_form(f, div, full=True):
    if not f:
        return f
    ctx, order = f.ctx, f.order
    rkey = order.rkey
    h = {m: c for c, m in f.terms}
    heap = [(rkey(m), m) for m in h]
    heapq.heapify(heap)
    out = []
    while heap:
        _, m = heapq.heappop(heap)
        c = h.pop(m, None)
        if c is None:
            continue
        j = div.find(m)
        if j is None:
            out.append(Term(c, m))
            if not full:
                out.extend(Term(h[k], k) for k in sorted(h, key=rkey))
                break
            continue
        gt = div.G[j].terms
        factor = c / gt[0].coeff
        q = tuple(map(sub, m, gt[0].mono))
        for gc, gm in gt[1:]:
            nm = tuple(map(add, gm, q))
            old = h.get(nm)
            if old is None:
                h[nm] = -factor * gc
                heapq.heappush(heap, (rkey(nm), nm))
            else:
                new = old - factor * gc
                if new:
                    h[nm] = new
                else:
                    del h[nm]
    return Polynomial._make(ctx, order, tuple(out))


def conventional_normal_form(f, G):
    """Fully reduced remainder of ``f`` on division by ``G`` (first divisor in list order)."""
    return _normal_form(f, _Divisors(G))


def interreduce(F):
    """Monic, fully interreduced generators of the ideal of ``F`` (not a Groebner basis in general)."""
    G = [f.monic() for f in F if f]
    changed = True
    while changed:
        changed = False
        G.sort(key=lambda g: g.order.key(g.lm))
        for k in range(len(G)):
            g = G[k]
            rest = G[:k] + G[k + 1:]
            r = conventional_normal_form(g, rest)
            if r != g:
                changed = True
                G = rest if not r else rest[:k] + [r.monic()] + rest[k:]
                break
    return sorted(G, key=lambda g: g.order.key(g.lm))


def reduce_basis(G):
    """The reduced Groebner basis from any Groebner basis ``G``."""
    G = [g.monic() for g in G if g]
    heads = {}
    for g in sorted(G, key=lambda g: (sum(g.lm), g.order.key(g.lm))):
        if not any(_divides(u, g.lm) for u in heads):
            heads[g.lm] = g
    minimal = list(heads.values())
    out = []
    for k, g in enumerate(minimal):
        rest = minimal[:k] + minimal[k + 1:]
        tail = Polynomial._make(g.ctx, g.order, g.terms[1:])
        out.append(g._make(g.ctx, g.order, (g.terms[0],)) + conventional_normal_form(tail, rest))
    return sorted(out, key=lambda g: g.order.key(g.lm))


@dataclass
class ReducedGB:
    generators: list
    order: object

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def as_set(self):
        return frozenset(self.generators)

    def contains(self, f):
        return not conventional_normal_form(f, self.generators)


def _minimal_pairs(G):
    """Index pairs ``(i, j)`` whose S-polynomials generate all the syzygies of the heads.

    For each ``j`` only the pairs ``(i, j)``, ``i < j``, whose ``lcm/LM(g_j)``
    is minimal under divisibility are kept (one per monomial), and pairs with
    coprime heads are dropped.
    """
    heads = [g.lm for g in G]
    for j, v in enumerate(heads):
        quot = {}
        for i in range(j):
            q = tuple(map(sub, monomial_lcm(heads[i], v), v))
            quot.setdefault(q, i)
        kept = []
        for q in sorted(quot, key=sum):
            if not any(_divides(p, q) for p in kept):
                kept.append(q)
        for q in kept:
            i = quot[q]
            if any(a and b for a, b in zip(heads[i], v)):
                yield i, j


def spolys_reduce_to_zero(G):
    """True iff every S-polynomial of ``G`` reduces to zero modulo ``G``."""
    G = [g for g in G if g]
    div = _Divisors(G)
    for i, j in _minimal_pairs(G):
        if _normal_form(s_polynomial(G[i], G[j]), div):
            return False
    return True


def buchberger(F, order=None):
    """Reduced monic Groebner basis of ``F`` by the normal strategy.

    Pairs are treated by smallest lcm first.  Pairs with coprime heads are
    skipped (first criterion); a pair ``(i, j)`` is also skipped when some
    ``g_k`` has its head dividing the lcm and both pairs ``(i, k)`` and
    ``(k, j)`` were already dealt with (second criterion).
    """
    F = [f for f in F if f]
    if order is not None:
        from .ordering import get_order

        order = get_order(order)
        F = [f.with_order(order) for f in F]
    if not F:
        return ReducedGB([], order)
    order = F[0].order
    G = interreduce(F)
    if any(not any(g.lm) for g in G):
        return ReducedGB([Polynomial.constant(G[0].ctx, 1, order)], order)

    def key(i, j):
        L = monomial_lcm(G[i].lm, G[j].lm)
        return (order.key(L), i, j)

    pending = set()
    heap = []

    def push(i, j):
        pending.add((i, j))
        heapq.heappush(heap, (key(i, j), i, j))

    for j in range(len(G)):
        for i in range(j):
            push(i, j)
    div = _Divisors(G)
    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        u, v = G[i].lm, G[j].lm
        if not any(a and b for a, b in zip(u, v)):
            continue
        L = monomial_lcm(u, v)
        if any(
            k not in (i, j)
            and _divides(G[k].lm, L)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(G))
        ):
            continue
        h = _normal_form(s_polynomial(G[i], G[j]), div)
        if not h:
            continue
        h = h.monic()
        if not any(h.lm):
            return ReducedGB([Polynomial.constant(h.ctx, 1, order)], order)
        G.append(h)
        div = _Divisors(G)
        n = len(G) - 1
        for i2 in range(n):
            push(i2, n)
    return ReducedGB(reduce_basis(G), order)


def ideal_contains(gb, f):
    """Membership of ``f`` in the ideal with Groebner basis ``gb``."""
    gens = gb.generators if isinstance(gb, ReducedGB) else list(gb)
    return not conventional_normal_form(f, gens)


def ideals_equal(F, G, order=None):
    """Whether ``F`` and ``G`` generate the same ideal (compares reduced bases)."""
    return buchberger(F, order).as_set() == buchberger(G, order).as_set()


@dataclass
class VerificationReport:
    theorem5: bool
    spoly: bool
    ideal_equal: bool
    heads_minimal: bool

    @property
    def ok(self):
        return self.theorem5 and self.spoly and self.ideal_equal and self.heads_minimal

    def as_dict(self):
        return {
            "theorem5": self.theorem5,
            "spoly": self.spoly,
            "ideal_equal": self.ideal_equal,
            "heads_minimal": self.heads_minimal,
        }


def verify_involutive_output(F, G, reference=None):
    """Check an involutive basis ``G`` computed from input ``F``.

    * ``theorem5``: every non-multiplicative prolongation of ``G`` has zero
      Janet normal form modulo ``G``;
    * ``spoly``: every S-polynomial of ``G`` reduces to zero conventionally;
    * ``ideal_equal``: the reduced basis of ``G`` equals ``buchberger(F)``
      (or ``reference`` when given);
    * ``heads_minimal``: no head of ``G`` is Janet-divisible by another.
    """
    from .engine import heads_involutively_autoreduced, theorem5_failures

    F = [f for f in F if f]
    G = [g for g in G if g]
    if not G:
        return VerificationReport(not F, True, not F, True)
    order = G[0].order
    F = [f.with_order(order) for f in F]
    t5 = not theorem5_failures(G)
    sp = spolys_reduce_to_zero(G)
    ref = reference if reference is not None else buchberger(F, order)
    if sp:
        same = frozenset(reduce_basis(G)) == ref.as_set()
    else:
        same = buchberger(G, order).as_set() == ref.as_set()
    return VerificationReport(t5, sp, same, heads_involutively_autoreduced(G))

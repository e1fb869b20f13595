"""Triples, involutive criteria and involutive normal forms.

Every polynomial handled by the completion algorithms travels in a
:class:`Triple` that remembers its ancestor and the non-multiplicative
variables already used to prolong it.  The reduction routines here are
shared by :mod:`janetbasis.algorithms`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field, fields
from operator import add, sub

from .janet import JanetIndex
from .ordering import DEGREVLEX
from .poly import Polynomial, Term, proper_divides

CRITERIA = ("c1", "c2", "c3", "c4")


class TimeLimitExceeded(RuntimeError):
    """Raised when a computation runs past its deadline; carries the partial stats."""

    def __init__(self, stats):
        super().__init__("time limit exceeded")
        self.stats = stats


@dataclass(frozen=True)
class CriteriaConfig:
    enabled: frozenset = frozenset({"c1", "c2"})
    rewritten: bool = True

    def __post_init__(self):
        enabled = frozenset(c.lower() for c in self.enabled)
        bad = enabled - set(CRITERIA)
        if bad:
            raise ValueError(f"unknown criteria: {sorted(bad)}")
        object.__setattr__(self, "enabled", enabled)

    @classmethod
    def parse(cls, text, rewritten=True):
        """Parse ``"c1,c2"``, ``"all"`` or ``"none"``."""
        text = text.strip().lower()
        if text in ("", "none"):
            return cls(frozenset(), rewritten)
        if text == "all":
            return cls(frozenset(CRITERIA), rewritten)
        return cls(frozenset(t.strip() for t in text.split(",") if t.strip()), rewritten)

    @classmethod
    def none(cls):
        return cls(frozenset(), False)

    def label(self):
        return ",".join(c for c in CRITERIA if c in self.enabled) or "none"


@dataclass
class RunStats:
    zero_reductions: int = 0
    c1_hits: int = 0
    c2_hits: int = 0
    c3_hits: int = 0
    c4_hits: int = 0
    rewritten_hits: int = 0
    head_reduce_purges: int = 0
    max_intermediate_degree: int = 0
    basis_size: int = 0
    cpu_ms: float = 0.0
    # bookkeeping used by the conservation audit
    selected: int = 0
    inserted: int = 0
    triples_created: int = 0

    def criteria_hits(self):
        return self.c1_hits + self.c2_hits + self.c3_hits + self.c4_hits

    def record_degree(self, d):
        if d > self.max_intermediate_degree:
            self.max_intermediate_degree = d

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


class Triple:
    """``{poly, anc, nm}`` plus identity stamps.

    ``anc_id`` identifies the ancestor (it is the birth stamp of the triple
    the ancestor first appeared in), so ancestor equality is an integer test.
    """

    __slots__ = ("poly", "anc", "anc_id", "nm", "birth")

    def __init__(self, poly, anc, anc_id, nm, birth):
        self.poly = poly
        self.anc = anc
        self.anc_id = anc_id
        self.nm = set(nm)
        self.birth = birth

    @property
    def lm(self):
        return self.poly.lm

    @property
    def anc_lm(self):
        return self.anc.lm

    def is_root(self):
        """True when the leading monomial is its ancestor's (not a proper prolongation)."""
        return self.poly.lm == self.anc.lm

    def __repr__(self):
        return (
            f"Triple(poly={self.poly}, anc={self.anc}, nm={sorted(self.nm)}, "
            f"birth={self.birth}, anc_id={self.anc_id})"
        )


def selection_key(p, anc_rank=None):
    """Lowest degrevlex LM first, then the earlier ancestor, then the older triple.

    ``anc_rank`` maps an ancestor id to its rank; by default ancestors rank by
    their birth stamp.
    """
    rank = p.anc_id if anc_rank is None else anc_rank(p.anc_id)
    return (DEGREVLEX.key(p.lm), rank, p.birth)


def select_initial(F):
    """Pick the input polynomial to seed the basis with.

    Returns ``(chosen, rest)`` where ``chosen`` has the degrevlex-smallest
    leading monomial (so no proper divisor among the others); ties go to the
    earlier input position and ``rest`` keeps that sorted order.
    """
    F = [f for f in F if f]
    if not F:
        raise ValueError("no nonzero polynomial to select from")
    ranked = sorted(range(len(F)), key=lambda k: (DEGREVLEX.key(F[k].lm), k))
    return F[ranked[0]], [F[k] for k in ranked[1:]]


def select_next(Q, anc_rank=None):
    """Remove and return the next triple to treat from the list ``Q``."""
    if not Q:
        raise ValueError("the queue is empty")
    k = min(range(len(Q)), key=lambda i: selection_key(Q[i], anc_rank))
    return Q.pop(k)


# ---------- criteria ----------


def _lcm(u, v):
    return tuple(map(max, u, v))


def _divides(u, v):
    return all(a <= b for a, b in zip(u, v))


def _proper(u, v):
    return u != v and _divides(u, v)


def which_criterion(p, g, T, cfg, index=None):
    """Name of the first enabled criterion discarding ``p`` against divisor ``g``, or ``None``.

    ``g`` is the triple in ``T`` whose leading monomial Janet-divides ``LM(p)``.
    C1..C4 are tried in that order.
    """
    enabled = cfg.enabled
    if not enabled:
        return None
    f_lm = p.lm
    af, ag = p.anc_lm, g.anc_lm
    if "c1" in enabled and tuple(map(add, af, ag)) == f_lm:
        return "c1"
    L = _lcm(af, ag)
    if "c2" in enabled and _proper(L, f_lm):
        return "c2"
    if "c3" in enabled:
        for t in T:
            if t is g:
                continue
            tl = t.lm
            if _proper(_lcm(tl, af), L) and _proper(_lcm(tl, ag), L):
                return "c3"
    if "c4" in enabled:
        if index is None:
            index = JanetIndex([t.lm for t in T])
        for t in T:
            if t.birth >= p.anc_id:
                continue
            tl = t.lm
            diff = tuple(map(sub, f_lm, tl))
            if min(diff) < 0 or sum(diff) != 1:
                continue
            y = diff.index(1)
            if y in index.nonmultiplicative(tl) and _proper(_lcm(af, t.anc_lm), f_lm):
                return "c4"
    return None


def criteria(p, g, T, cfg, stats=None, index=None):
    """True iff an enabled criterion lets ``p`` be discarded; the hit is recorded in ``stats``."""
    name = which_criterion(p, g, T, cfg, index)
    if name is None:
        return False
    if stats is not None:
        setattr(stats, f"{name}_hits", getattr(stats, f"{name}_hits") + 1)
    return True


# ---------- reduction kernel ----------

FULL, HEAD, TAIL = "full", "head", "tail"


def _reduce(f, divisors, index, mode=FULL, head_hook=None, quotients=None, trace=None):
    """Involutive reduction of ``f`` by ``divisors`` (indexed by ``index``).

    ``mode`` selects which terms are reduced: all of them, only the leading
    one (repeatedly, until irreducible) or all but the leading one.
    ``head_hook(j)`` is consulted once, when the original leading term is
    reducible by ``divisors[j]``; a true answer makes the result zero.
    ``quotients`` (a list) collects ``(coeff, mono, j)`` for each step so that
    ``f = sum(coeff*mono*divisors[j]) + result``.  ``trace`` (a list) collects
    ``(mono, j)`` for every monomial examined, ``j`` being ``None`` when it
    was irreducible; the result is a function of ``f`` and these decisions.
    """
    if not f:
        return f
    ctx, order = f.ctx, f.order
    rkey = order.rkey
    h = {m: c for c, m in f.terms}
    heap = [(rkey(m), m) for m in h]
    heapq.heapify(heap)
    out = []
    first = True
    lookup = index.divisor
    while heap:
        _, m = heapq.heappop(heap)
        c = h.pop(m, None)
        if c is None:
            continue
        if first and mode == TAIL:
            j = None
        else:
            j = lookup(m)
        if trace is not None:
            trace.append((m, j))
        if j is None:
            out.append(Term(c, m))
            if mode == HEAD:
                rest = sorted(h, key=rkey)
                out.extend(Term(h[k], k) for k in rest)
                break
            first = False
            continue
        if first and head_hook is not None and head_hook(j):
            return Polynomial._make(ctx, order, ())
        first = False
        g = divisors[j]
        gt = g.terms
        factor = c / gt[0].coeff
        q = tuple(map(sub, m, gt[0].mono))
        if quotients is not None:
            quotients.append((factor, q, j))
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


def involutive_normal_form(f, G, index=None, quotients=None):
    """Full Janet normal form of ``f`` modulo the polynomial list ``G`` (no criteria)."""
    G = list(G)
    if index is None:
        index = JanetIndex([g.lm for g in G])
    return _reduce(f, G, index, FULL, quotients=quotients)


def _index_for(T, index):
    if index is None:
        index = JanetIndex([t.lm for t in T])
    return index


def normal_form(p, T, cfg, stats=None, index=None):
    """Involutive normal form of ``poly(p)`` modulo ``poly(T)`` with the head criteria.

    If the leading term of ``p`` is reducible and an enabled criterion fires
    against its Janet divisor, the result is zero straight away.  Otherwise
    every reducible term is reduced.  A zero result not caused by a criterion
    is counted as a reduction to zero in ``stats``.
    """
    T = list(T)
    index = _index_for(T, index)
    polys = [t.poly for t in T]
    fired = []

    def hook(j):
        if criteria(p, T[j], T, cfg, stats, index):
            fired.append(j)
            return True
        return False

    h = _reduce(p.poly, polys, index, FULL, head_hook=hook if cfg.enabled else None)
    if not h and not fired and stats is not None and p.poly:
        stats.zero_reductions += 1
    return h


def head_normal_form(p, T, cfg, stats=None, index=None):
    """Head normal form of ``poly(p)`` modulo ``poly(T)``.

    Irreducible heads are returned as is.  For a proper prolongation
    (``LM(p) != LM(anc(p))``) the criteria are tried against the Janet
    divisor of the head first; if none fires, or ``p`` is not a prolongation,
    the head is reduced until irreducible or zero.  Tails are left alone.
    """
    T = list(T)
    index = _index_for(T, index)
    f = p.poly
    if not f:
        return f
    j = index.divisor(f.lm)
    if j is None:
        return f
    if not p.is_root() and criteria(p, T[j], T, cfg, stats, index):
        return Polynomial._make(f.ctx, f.order, ())
    h = _reduce(f, [t.poly for t in T], index, HEAD)
    if not h and stats is not None:
        stats.zero_reductions += 1
    return h


def tail_normal_form(p, T, index=None):
    """Reduce every non-leading term of ``poly(p)``; the head must already be irreducible."""
    T = list(T)
    index = _index_for(T, index)
    f = p.poly if isinstance(p, Triple) else p
    if f and index.divisor(f.lm) is not None:
        raise ValueError("tail_normal_form needs a head-irreducible polynomial")
    return _reduce(f, [t.poly for t in T], index, TAIL)


def head_reduce(Q, T, cfg, stats=None, index=None, new_root=None, anc_rank=None):
    """Head-reduce every triple of ``Q`` modulo ``T`` and return the survivors.

    Triples whose leading monomial changed come back as fresh roots
    ``{h, h, {}}`` built by ``new_root(h)``.  When a root reduces to zero,
    the triples still waiting in the working set with the same ancestor are
    dropped (counted in ``stats.head_reduce_purges``).
    """
    T = list(T)
    index = _index_for(T, index)
    if new_root is None:
        counter = [max([t.birth for t in [*T, *Q]], default=0)]

        def new_root(h):
            counter[0] += 1
            return Triple(h, h, counter[0], (), counter[0])

    S = sorted(Q, key=lambda p: selection_key(p, anc_rank), reverse=True)
    out = []
    while S:
        p = S.pop()
        h = head_normal_form(p, T, cfg, stats, index)
        if h:
            if h.lm != p.lm:
                out.append(new_root(h.monic()))
            else:
                out.append(p)
        elif p.is_root() and cfg.rewritten:
            kept = [q for q in S if q.anc_id != p.anc_id]
            if stats is not None:
                stats.head_reduce_purges += len(S) - len(kept)
            S = kept
    return out


# ---------- post-processing ----------


def tail_autoreduce(G):
    """Replace each ``g`` by its involutive normal form modulo the others; result is monic.

    Heads are untouched, so one pass suffices and the operation is idempotent.
    The Janet partition is the one of ``LM(G)``.
    """
    G = [g for g in G if g]
    if not G:
        return []
    index = JanetIndex([g.lm for g in G])
    out = [_reduce(g, G, index, TAIL).monic() for g in G]
    return sort_basis(out)


def sort_basis(G):
    """Sort by increasing leading monomial under each polynomial's own ordering."""
    return sorted(G, key=lambda g: g.order.key(g.lm))


def nonmultiplicative_prolongations(G, index=None):
    """All ``(g, x, x*g)`` with ``x`` non-multiplicative for ``LM(g)`` in ``LM(G)``."""
    G = list(G)
    index = index or JanetIndex([g.lm for g in G])
    for g in G:
        for x in sorted(index.nonmultiplicative(g.lm)):
            yield g, x, g.mul_var(x)


def theorem5_failures(G):
    """Non-multiplicative prolongations of ``G`` whose involutive normal form is nonzero.

    An empty list certifies that ``G`` is a Janet basis of the ideal it generates.
    """
    G = [g for g in G if g]
    if not G:
        return []
    index = JanetIndex([g.lm for g in G])
    bad = []
    for g, x, xg in nonmultiplicative_prolongations(G, index):
        if _reduce(xg, G, index, FULL):
            bad.append((g, x))
    return bad


def is_involutive_basis(G):
    return not theorem5_failures(G)


def heads_involutively_autoreduced(G):
    """No leading monomial is Janet-divisible by another element's leading monomial."""
    heads = [g.lm for g in G if g]
    if len(set(heads)) != len(heads):
        return False
    if not heads:
        return True
    index = JanetIndex(heads)
    for k, u in enumerate(heads):
        for j, (v, mult) in enumerate((h, index.multiplicative(h)) for h in heads):
            if j != k and all(
                a <= b and (a == b or i in mult) for i, (a, b) in enumerate(zip(v, u))
            ):
                return False
    return True


def has_proper_divisor(u, monomials):
    return any(proper_divides(v, u) for v in monomials)

"""Janet basis completion: InvBasis, Gerdt's algorithm and VarGerdt.

All three return ``(basis, stats)`` with a monic basis sorted by leading
monomial.  The basis is the minimal Janet basis of the input ideal; it is
not necessarily tail-autoreduced (see :func:`janetbasis.engine.tail_autoreduce`).
"""

from __future__ import annotations

import heapq
import itertools
import time

from .engine import (
    CriteriaConfig,
    RunStats,
    TimeLimitExceeded,
    Triple,
    _reduce,
    HEAD,
    head_reduce,
    normal_form,
    select_initial,
    select_next,
    sort_basis,
    tail_normal_form,
)
from .janet import JanetIndex
from .ordering import DEGREVLEX, get_order
from .poly import proper_divides

ALGORITHMS = ("invbasis", "gerdt", "vargerdt")
TIE_BREAKS = ("examined", "birth")


def prepare_input(F, order=None, autoreduce=False):
    """Drop zeros and duplicates, re-sort under ``order`` and make every polynomial monic."""
    F = list(F)
    if order is not None:
        order = get_order(order)
        F = [f.with_order(order) for f in F]
    seen = set()
    out = []
    for f in F:
        if not f:
            continue
        f = f.monic()
        if f in seen:
            continue
        seen.add(f)
        out.append(f)
    if autoreduce and out:
        from .oracle import interreduce

        out = interreduce(out)
    return out


class BasisState:
    """``T`` (intermediate basis), ``Q`` (queue), statistics and the stamp counter.

    Queue ties on the leading monomial go to the triple whose ancestor was
    examined first.  With ``tie_break="examined"`` an ancestor counts as
    examined the first time a triple carrying it is selected (the seed at
    once); ancestors not examined yet rank after all examined ones, by birth.
    ``tie_break="birth"`` ranks ancestors by birth stamp alone.
    """

    def __init__(self, deadline=None, tie_break="examined"):
        if tie_break not in TIE_BREAKS:
            raise ValueError(f"unknown tie-break {tie_break!r}; expected one of {TIE_BREAKS}")
        self.T = []
        self.Q = []
        self.stats = RunStats()
        self.index = JanetIndex([])
        self._stamp = 0
        self.deadline = deadline
        self.tie_break = tie_break
        self.examined = {}

    def anc_rank(self, anc_id):
        if self.tie_break == "birth":
            return anc_id
        k = self.examined.get(anc_id)
        return (0, k) if k is not None else (1, anc_id)

    def select(self):
        p = select_next(self.Q, self.anc_rank)
        self.stats.selected += 1
        self.examined.setdefault(p.anc_id, len(self.examined))
        return p

    def stamp(self):
        self._stamp += 1
        return self._stamp

    def new_root(self, poly):
        b = self.stamp()
        self.stats.triples_created += 1
        return Triple(poly, poly, b, (), b)

    def new_triple(self, poly, anc, anc_id, nm=()):
        self.stats.triples_created += 1
        return Triple(poly, anc, anc_id, nm, self.stamp())

    def refresh(self):
        self.index = JanetIndex([t.lm for t in self.T])

    def check_time(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.stats.basis_size = len(self.T)
            raise TimeLimitExceeded(self.stats)

    def seed(self, F):
        f, rest = select_initial(F)
        self.T = [self.new_root(f)]
        self.examined[self.T[0].anc_id] = 0
        self.stats.record_degree(f.degree())
        self.Q = [self.new_root(q) for q in rest]
        self.refresh()

    def displace(self, lm):
        """Move back to ``Q`` every element of ``T`` whose head is properly divisible by ``lm``."""
        moved = [q for q in self.T if proper_divides(lm, q.lm)]
        if moved:
            self.T = [q for q in self.T if not proper_divides(lm, q.lm)]
            self.Q.extend(moved)
        return moved

    def prolong(self):
        """Queue ``x*poly(q)`` for each new non-multiplicative ``x`` of each ``q`` in ``T``."""
        for q in self.T:
            nm = self.index.nonmultiplicative(q.lm)
            for x in sorted(nm - q.nm):
                self.Q.append(self.new_triple(q.poly.mul_var(x), q.anc, q.anc_id))
            q.nm = set(nm)

    def result(self, start):
        basis = sort_basis([t.poly for t in self.T])
        self.stats.basis_size = len(basis)
        self.stats.cpu_ms = (time.process_time() - start) * 1000.0
        return basis, self.stats


def _deadline(time_limit):
    return None if time_limit is None else time.monotonic() + time_limit


def vargerdt(F, order=None, cfg=None, time_limit=None, preprocess=False, tie_break="examined"):
    """Minimal Janet basis by the VarGerdt variant: full normal forms, one element at a time.

    ``cfg`` defaults to criteria C1 and C2 with the Rewritten criterion.
    """
    start = time.process_time()
    cfg = cfg or CriteriaConfig()
    F = prepare_input(F, order, preprocess)
    state = BasisState(_deadline(time_limit), tie_break)
    if not F:
        return [], state.stats
    state.seed(F)
    stats = state.stats
    while state.Q:
        state.check_time()
        p = state.select()
        stats.record_degree(p.poly.degree())
        h = normal_form(p, state.T, cfg, stats, state.index)
        if not h:
            if p.is_root() and cfg.rewritten:
                kept = [q for q in state.Q if q.anc_id != p.anc_id]
                stats.rewritten_hits += len(state.Q) - len(kept)
                state.Q = kept
            continue
        h = h.monic()
        stats.inserted += 1
        if h.lm != p.lm:
            state.displace(h.lm)
            state.T.append(state.new_root(h))
        else:
            state.T.append(state.new_triple(h, p.anc, p.anc_id, p.nm))
        state.refresh()
        state.prolong()
    return state.result(start)


def gerdt(F, order=None, cfg=None, time_limit=None, preprocess=False, tie_break="examined"):
    """Minimal Janet basis by Gerdt's algorithm: the whole queue is kept head-reduced."""
    start = time.process_time()
    cfg = cfg or CriteriaConfig()
    F = prepare_input(F, order, preprocess)
    state = BasisState(_deadline(time_limit), tie_break)
    if not F:
        return [], state.stats
    state.seed(F)
    stats = state.stats

    def head_reduce_queue():
        state.Q = head_reduce(
            state.Q, state.T, cfg, stats, state.index, state.new_root, state.anc_rank
        )

    head_reduce_queue()
    while state.Q:
        state.check_time()
        p = state.select()
        stats.record_degree(p.poly.degree())
        if p.is_root() and state.displace(p.lm):
            state.refresh()
            if state.index.divisor(p.lm) is not None:
                # the smaller head set enlarged a cone that now covers LM(p)
                h = _reduce(p.poly, [t.poly for t in state.T], state.index, HEAD)
                if not h:
                    stats.zero_reductions += 1
                else:
                    state.Q.append(state.new_root(h.monic()))
                head_reduce_queue()
                continue
        h = tail_normal_form(p, state.T, state.index).monic()
        stats.inserted += 1
        state.T.append(state.new_triple(h, p.anc, p.anc_id, p.nm))
        state.refresh()
        state.prolong()
        head_reduce_queue()
    return state.result(start)


def invbasis(F, order=None, time_limit=None, preprocess=False):
    """Minimal Janet basis by the plain completion loop, no triples and no criteria.

    All non-multiplicative prolongations of the current basis are queued
    again after every change, so repeated prolongations are processed.
    """
    start = time.process_time()
    F = prepare_input(F, order, preprocess)
    stats = RunStats()
    if not F:
        return [], stats
    deadline = _deadline(time_limit)
    f, rest = select_initial(F)
    G = [f]
    stats.record_degree(f.degree())
    index = JanetIndex([f.lm])
    # queued polynomials as a set plus a heap ordered by (LM, time queued);
    # a polynomial already waiting is not queued twice
    Q = set()
    heap = []
    counter = itertools.count()

    def enqueue(q):
        if q not in Q:
            Q.add(q)
            heapq.heappush(heap, (DEGREVLEX.key(q.lm), next(counter), q))

    for q in rest:
        enqueue(q)
    # p -> (divisor decisions, normal form) from the last time p was reduced
    seen = {}
    while Q:
        if deadline is not None and time.monotonic() > deadline:
            stats.basis_size = len(G)
            raise TimeLimitExceeded(stats)
        p = heapq.heappop(heap)[2]
        Q.discard(p)
        stats.selected += 1
        stats.record_degree(p.degree())
        h = _replay(seen.get(p), G, index)
        if h is None:
            trace = []
            h = _reduce(p, G, index, trace=trace)
            seen[p] = ([(m, None if j is None else G[j]) for m, j in trace], h)
        if not h:
            stats.zero_reductions += 1
            continue
        h = h.monic()
        stats.inserted += 1
        moved = [g for g in G if proper_divides(h.lm, g.lm)]
        if moved:
            G = [g for g in G if not proper_divides(h.lm, g.lm)]
            for g in moved:
                enqueue(g)
        G.append(h)
        index = JanetIndex([g.lm for g in G])
        for g in G:
            for x in sorted(index.nonmultiplicative(g.lm)):
                enqueue(g.mul_var(x))
    basis = sort_basis(G)
    stats.basis_size = len(basis)
    stats.cpu_ms = (time.process_time() - start) * 1000.0
    return basis, stats


def _replay(entry, G, index):
    """The cached normal form if every recorded divisor decision still holds, else ``None``.

    Prolongations come back to the queue after every change of the basis;
    a reduction is a function of its divisor decisions, so when each
    examined monomial still has the same divisor (or still none) the old
    result is the new one.
    """
    if entry is None:
        return None
    trace, h = entry
    lookup = index.divisor
    for m, g in trace:
        j = lookup(m)
        if (g is None) != (j is None) or (j is not None and G[j] is not g):
            return None
    return h


def compute(
    F, algorithm="vargerdt", order=None, cfg=None, time_limit=None, preprocess=False,
    tie_break="examined",
):
    """Dispatch to one of :data:`ALGORITHMS`."""
    if algorithm == "vargerdt":
        return vargerdt(F, order, cfg, time_limit, preprocess, tie_break)
    if algorithm == "gerdt":
        return gerdt(F, order, cfg, time_limit, preprocess, tie_break)
    if algorithm == "invbasis":
        return invbasis(F, order, time_limit, preprocess)
    raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")

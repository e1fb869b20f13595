"""Janet division on finite monomial sets.

For a finite set ``U`` of monomials every ``u`` in ``U`` gets a split of the
variables into multiplicative and non-multiplicative ones.  Variable ``x_i``
is multiplicative for ``u`` when ``u`` has the largest ``x_i``-degree among
the elements of ``U`` sharing its degrees in ``x_1, ..., x_{i-1}``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field


class JanetPartition:
    """Multiplicative / non-multiplicative variables for each monomial of a set."""

    __slots__ = ("nvars", "_mult")

    def __init__(self, monomials):
        U = set(monomials)
        if not U:
            raise ValueError("the Janet partition of an empty set is undefined")
        lengths = {len(u) for u in U}
        if len(lengths) != 1:
            raise ValueError("monomials from different contexts")
        (n,) = lengths
        self.nvars = n
        mult = {u: [] for u in U}
        for i in range(n):
            top = {}
            for u in U:
                prefix = u[:i]
                if top.get(prefix, -1) < u[i]:
                    top[prefix] = u[i]
            for u in U:
                if u[i] == top[u[:i]]:
                    mult[u].append(i)
        self._mult = {u: frozenset(v) for u, v in mult.items()}

    def __contains__(self, u):
        return u in self._mult

    def __iter__(self):
        return iter(self._mult)

    def __len__(self):
        return len(self._mult)

    @property
    def monomials(self):
        return frozenset(self._mult)

    def multiplicative(self, u):
        try:
            return self._mult[u]
        except KeyError:
            raise ValueError(f"{u!r} is not in the partitioned set") from None

    def nonmultiplicative(self, u):
        return frozenset(range(self.nvars)) - self.multiplicative(u)

    def __eq__(self, other):
        return isinstance(other, JanetPartition) and self._mult == other._mult

    def __repr__(self):
        return f"JanetPartition({dict(self._mult)!r})"


def janet_partition(U):
    return JanetPartition(U)


def _divides_involutively(u, mult, v):
    for i, (a, b) in enumerate(zip(u, v)):
        if a > b or (a < b and i not in mult):
            return False
    return True


def is_involutive_divisor(u, v, part):
    """True iff ``u |_J v``: ``u`` divides ``v`` and ``v/u`` only uses multiplicative variables of ``u``."""
    if len(u) != len(v):
        raise ValueError("monomials from different contexts")
    return _divides_involutively(u, part.multiplicative(u), v)


def find_involutive_divisor(v, U, part):
    """Return the Janet divisor of ``v`` in ``U``, or ``None`` if ``v`` is irreducible."""
    best = None
    for u in U:
        if _divides_involutively(u, part.multiplicative(u), v):
            if best is None or sum(u) < sum(best):
                best = u
    return best


class JanetIndex:
    """Janet divisor lookup for a fixed list of head monomials.

    The heads are stored in a Janet tree: level ``i`` groups the heads by
    their degree in ``x_i`` below a common prefix of degrees in
    ``x_1..x_{i-1}``.  Since Janet cones are disjoint, at every level at most
    one branch can lead to the divisor of ``v``: the one of degree ``v_i``,
    or the top-degree one when that degree is below ``v_i`` (then ``x_i`` is
    multiplicative).  A lookup is therefore a single walk down the tree.
    Answers are memoised.
    """

    __slots__ = ("heads", "partition", "_tree", "_cache", "nvars")

    def __init__(self, heads):
        self.heads = list(heads)
        if len(set(self.heads)) != len(self.heads):
            raise ValueError("duplicate head monomials")
        self._cache = {}
        if not self.heads:
            self.partition = None
            self._tree = None
            self.nvars = None
            return
        self.partition = JanetPartition(self.heads)
        self.nvars = self.partition.nvars
        # node: [top degree, {degree: child}]; leaves are head indices
        self._tree = [0, {}]
        for j, u in enumerate(self.heads):
            node = self._tree
            for i, a in enumerate(u):
                if a > node[0]:
                    node[0] = a
                children = node[1]
                if i == len(u) - 1:
                    children[a] = j
                else:
                    node = children.setdefault(a, [0, {}])

    def divisor(self, v):
        """Index of the head that Janet-divides ``v``, or ``None``."""
        try:
            return self._cache[v]
        except KeyError:
            pass
        node = self._tree
        if node is not None:
            for b in v:
                top, children = node
                node = children.get(top if top < b else b)
                if node is None:
                    break
        self._cache[v] = node
        return node

    def multiplicative(self, u):
        return self.partition.multiplicative(u)

    def nonmultiplicative(self, u):
        return self.partition.nonmultiplicative(u)

    def __len__(self):
        return len(self.heads)


# ---------- axiom falsifier ----------


def cones_intersect(u, mu, v, mv):
    """Whether the cones ``u*<mu>`` and ``v*<mv>`` share a monomial.

    The cones meet iff ``lcm(u, v)`` lies in both; per coordinate a fixed
    exponent on one side has to dominate (or equal) the other side.
    """
    for i, (a, b) in enumerate(zip(u, v)):
        fa, fb = i not in mu, i not in mv
        if fa and fb and a != b:
            return False
        if fa and not fb and a < b:
            return False
        if fb and not fa and b < a:
            return False
    return True


def in_cone(u, mu, w):
    return _divides_involutively(u, mu, w)


@dataclass
class AxiomViolation:
    axiom: int
    witness: tuple

    def __str__(self):
        return f"axiom {self.axiom} violated by {self.witness!r}"


@dataclass
class AxiomReport:
    violations: list = field(default_factory=list)
    pairs_checked: int = 0
    subsets_checked: int = 0

    @property
    def ok(self):
        return not self.violations


def check_division_axioms(U, max_subsets=256, rng=None):
    """Check the three involutive-division axioms for the Janet partition of ``U``.

    The first two axioms are decided exactly (cone intersection is tested via
    the lcm).  The third is checked on every subset ``V`` of ``U`` containing
    ``u`` when there are at most ``max_subsets`` of them, otherwise on
    ``max_subsets`` random ones.
    """
    U = sorted(set(U))
    report = AxiomReport()
    if not U:
        return report
    part = JanetPartition(U)
    M = {u: part.multiplicative(u) for u in U}

    for u, v in itertools.combinations_with_replacement(U, 2):
        report.pairs_checked += 1
        if cones_intersect(u, M[u], v, M[v]):
            if not (in_cone(v, M[v], u) or in_cone(u, M[u], v)):
                report.violations.append(AxiomViolation(1, (u, v)))
        for a, b in ((u, v), (v, u)):
            # b in cone of a  =>  monoid of b inside monoid of a
            if in_cone(a, M[a], b) and not M[b] <= M[a]:
                report.violations.append(AxiomViolation(2, (a, b)))

    rng = rng or random.Random(0)
    for u in U:
        others = [w for w in U if w != u]
        total = 2 ** len(others)
        if total <= max_subsets:
            subsets = (
                [o for k, o in enumerate(others) if mask >> k & 1] for mask in range(total)
            )
        else:
            subsets = (
                [o for o in others if rng.random() < 0.5] for _ in range(max_subsets)
            )
        for rest in subsets:
            report.subsets_checked += 1
            sub_mult = JanetPartition([u, *rest]).multiplicative(u)
            if not M[u] <= sub_mult:
                report.violations.append(AxiomViolation(3, (u, tuple(rest))))
    return report

"""Monomial orderings.

Monomials are tuples of non-negative exponents.  An ordering is described by
two key functions: ``key`` sorts ascending in the ordering, ``rkey`` sorts
descending (and is what the heaps in the reduction loops use).
"""

from __future__ import annotations


def _lex_key(m):
    return m


def _lex_rkey(m):
    return tuple([-e for e in m])


def _degrevlex_key(m):
    # higher degree wins; on ties the smaller exponent at the rightmost
    # differing position wins
    return (sum(m), *[-e for e in reversed(m)])


def _degrevlex_rkey(m):
    return (-sum(m), *reversed(m))


class MonomialOrder:
    """A total, multiplicative monomial ordering with 1 as the minimum."""

    __slots__ = ("name", "key", "rkey")

    def __init__(self, name, key, rkey):
        self.name = name
        self.key = key
        self.rkey = rkey

    def compare(self, u, v):
        """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
        if len(u) != len(v):
            raise ValueError(f"monomials from different contexts: {u!r}, {v!r}")
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def max(self, monomials):
        return max(monomials, key=self.key)

    def min(self, monomials):
        return min(monomials, key=self.key)

    def __repr__(self):
        return f"MonomialOrder({self.name!r})"

    def __reduce__(self):
        return (get_order, (self.name,))


LEX = MonomialOrder("lex", _lex_key, _lex_rkey)
DEGREVLEX = MonomialOrder("degrevlex", _degrevlex_key, _degrevlex_rkey)

ORDERS = {o.name: o for o in (LEX, DEGREVLEX)}


def get_order(name):
    """Look up an ordering by name (``lex`` or ``degrevlex``)."""
    if isinstance(name, MonomialOrder):
        return name
    try:
        return ORDERS[name]
    except KeyError:
        raise ValueError(
            f"unknown monomial ordering {name!r}; expected one of {sorted(ORDERS)}"
        ) from None


def compare(u, v, order=DEGREVLEX):
    return get_order(order).compare(u, v)

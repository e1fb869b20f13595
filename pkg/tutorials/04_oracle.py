"""Checking a Janet basis against plain Buchberger.

A Janet basis is a Groebner basis, usually not a reduced one.  Removing
the redundant heads and reducing the tails must land exactly on the
reduced Groebner basis that Buchberger's algorithm computes on its own.
"""

from janetbasis import load_fixture, vargerdt
from janetbasis.oracle import buchberger, reduce_basis, s_polynomial, verify_involutive_output

F = load_fixture("liu").polys
G, _ = vargerdt(F)
gb = buchberger(F)
print(len(G), "Janet basis elements,", len(gb), "in the reduced Groebner basis")
print(reduce_basis(G) == list(gb))

report = verify_involutive_output(F, G, gb)
print(report)

# drop an element whose head is needed by the Groebner basis: the checks notice
heads = {g.lm for g in gb}
k = next(i for i, g in enumerate(G) if g.lm in heads)
print(verify_involutive_output(F, G[:k] + G[k + 1:], gb))

print(s_polynomial(F[0], F[1]))

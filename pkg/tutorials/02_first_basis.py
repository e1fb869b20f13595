"""A first Janet basis, worked through by hand and by machine.

For {x^2, y^2} the Janet partition leaves x non-multiplicative for y^2,
so the prolongation x*y^2 has to be examined.  Nothing in the set divides
it involutively, so it joins the basis.  The next prolongation x^2*y^2
is thrown away by criterion C1: it is the product of the heads of the
two ancestors x^2 and y^2.
"""

from janetbasis import CriteriaConfig, gerdt, invbasis, parse_system, vargerdt
from janetbasis.oracle import verify_involutive_output

system = parse_system("""
vars: x y
order: degrevlex
x^2
y^2
""")

G, stats = vargerdt(system.polys)
print("basis:", [str(g) for g in G])
print("C1 hits:", stats.c1_hits, " reductions to zero:", stats.zero_reductions)

# the same basis without any criterion costs real reductions
G0, stats0 = vargerdt(system.polys, cfg=CriteriaConfig.none())
print("criteria off:", [str(g) for g in G0], " reductions to zero:", stats0.zero_reductions)

# all three completion algorithms give the same minimal basis
for alg in (invbasis, gerdt, vargerdt):
    print(alg.__name__, sorted(str(g) for g in alg(system.polys)[0]))

print(verify_involutive_output(system.polys, G))

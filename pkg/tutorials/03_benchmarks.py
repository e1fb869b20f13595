"""Statistics for the bundled benchmark systems.

The table has the usual columns: reductions to zero, hits of C1 and C2,
triples dropped by the Rewritten criterion and the highest degree met.
Runs in well under a minute.
"""

from janetbasis import generate_cyclic, gerdt, load_fixture, tail_autoreduce, vargerdt

systems = {
    "noon4": load_fixture("noon4").polys,
    "cyclic5": generate_cyclic(5).polys,
    "katsura5": load_fixture("katsura5").polys,
    "eco7": load_fixture("eco7").polys,
}

print(f"{'system':10} {'algorithm':9} {'reds':>5} {'C1':>4} {'C2':>4} {'R':>4} {'deg':>4} {'size':>5} {'ms':>7}")
for name, F in systems.items():
    bases = []
    for alg in (vargerdt, gerdt):
        G, s = alg(F)
        bases.append(tail_autoreduce(G))
        print(f"{name:10} {alg.__name__:9} {s.zero_reductions:5} {s.c1_hits:4} {s.c2_hits:4} "
              f"{s.rewritten_hits:4} {s.max_intermediate_degree:4} {s.basis_size:5} {s.cpu_ms:7.0f}")
    # the minimal Janet basis is unique once tails are reduced
    assert bases[0] == bases[1]

# ties among equal leading monomials can also be broken by ancestor birth
G, s = vargerdt(systems["cyclic5"], tie_break="birth")
print("cyclic5 with birth-order ties:", s.zero_reductions, s.c1_hits, s.c2_hits, s.rewritten_hits)

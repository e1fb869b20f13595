"""Janet division on a few monomial sets.

Run with ``python tutorials/01_janet_division.py``.
"""

from janetbasis.janet import (
    JanetIndex,
    check_division_axioms,
    find_involutive_divisor,
    janet_partition,
)

# monomials are exponent tuples; with variables (x, y), x^2 is (2, 0)
U = [(2, 0), (1, 1), (0, 2)]
part = janet_partition(U)
for u in U:
    print(u, "multiplicative:", sorted(part.multiplicative(u)),
          "non-multiplicative:", sorted(part.nonmultiplicative(u)))

# x^2 is top in x, so both variables are multiplicative for it;
# x*y and y^2 sit in x-classes of their own but are not top in x
print(find_involutive_divisor((3, 1), U, part))  # x^2 covers x^3*y
print(find_involutive_divisor((1, 2), U, part))  # x*y covers x*y^2 through y
print(find_involutive_divisor((0, 5), U, part))  # y^2

# the cones of a Janet partition never overlap, so an index can find
# the one possible divisor with a single walk
idx = JanetIndex(U)
print([idx.divisor(v) for v in [(3, 1), (1, 2), (0, 5)]])

# the three division axioms, checked by brute force
report = check_division_axioms([(2, 1, 0), (0, 2, 1), (1, 0, 3), (0, 0, 2)])
print("axioms ok:", report.ok, "pairs:", report.pairs_checked, "subsets:", report.subsets_checked)

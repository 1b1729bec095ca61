"""Which permutational identities does a variety satisfy?

Perm_n(V) is the group of permutations pi for which V satisfies
x1...xn = x(1pi)...x(npi). Its subgroups of S_3 form a six-element lattice.
"""
from __future__ import annotations

from semivar.identities import make_permutational, parse_identity
from semivar.permgroups import Permutation, all_subgroups, perm_n, pollak_lower_bound
from semivar.varlattice.catalog import prop2_basis, theorem1_system

lattice = all_subgroups(3)
print(f"{len(lattice.subgroups)} subgroups of S_3:")
for a, b in lattice.edge_list():
    print(f"  {a} < {b}")
print()

for cyc in ["(12)", "(13)", "(23)", "(123)"]:
    rho = Permutation.parse(cyc, 3)
    print(f"basis with {make_permutational(3, rho)}: Perm_3 = {perm_n(prop2_basis(rho), 3)}")
print()

for i in (2, 3, 4, 5):
    print(f"system ({i}): Perm_4 = {perm_n(theorem1_system(i), 4)}")
print()

# One permutational identity of length 3 already forces a large group at length n.
for seed in ["xyz = yxz", "xyz = xzy", "xyz = zyx"]:
    print(f"{seed} forces at least {pollak_lower_bound(parse_identity(seed), 5).name()} in S_5")

"""Deriving u = v by alternating identities of two varieties.

Each step of a deduction is tagged with the side that justifies it. The
search returns a shortest deduction with deterministic tie-breaking.
"""
from __future__ import annotations

from semivar.engine import ZERO, find_deduction, verify_deduction
from semivar.identities import parse_system
from semivar.varlattice import FlatNil, SLJoin
from semivar.permgroups import Permutation
from semivar.varlattice.catalog import prop2_basis, theorem1_system
from semivar.words import Word

A, B = parse_system("xyz = zyx;"), parse_system("xyz = yxz;")
d = find_deduction(A, B, Word.parse("xyz"), Word.parse("xzy"))
print("xyz = xzy from xyz = zyx [A] and xyz = yxz [B]:")
print(d)
print("verified:", verify_deduction(d, A, B))
print()

# With the semilattice variety joined to both sides every step keeps the
# content, and a shortest deduction passes through at most two words that
# are zero in the nil part N, next to each other.
N = FlatNil.of(theorem1_system(2))
V = FlatNil.of(prop2_basis(Permutation.parse("(12)", 3)))
for u, v in [("xyz", "xzy"), ("xxy", "xyxy")]:
    d = find_deduction(SLJoin(N), SLJoin(V), Word.parse(u), Word.parse(v))
    print(f"{u} = {v} in (SL v N) ^ (SL v V):")
    print(d)
    print("zero in N:", [str(w) for w in d.words if N.key(w) == ZERO])
    print()

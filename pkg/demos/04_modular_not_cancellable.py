"""A modular element that is not cancellable.

V, X and Y are nil varieties whose groups Perm_3 are gr{(12)}, gr{(13)} and
gr{(123)}. X and Y differ, yet their meets with V agree and so do their
joins with V. Inside the finite lattice they generate with SL, V is modular
and (X, Y) witnesses that it is not cancellable.
"""
from __future__ import annotations

from semivar.varlattice import (
    is_cancellable_in, is_modular_in, pentagon, prop2_family, verify_prop2,
)

print(verify_prop2("(12)", "(13)", "(123)"))
print()

F, ix = prop2_family("(12)", "(13)", "(123)")
print(f"closed family of {len(F)} varieties:")
for i in range(len(F)):
    print(f"  {i:2d} {F.label(i)}")
print("V modular:", is_modular_in(F, ix["V"]))
y, z = is_cancellable_in(F, ix["V"])
print(f"V cancellable: no, witnessed by {F.label(y)} and {F.label(z)}")
print()

N5 = pentagon()
a, c = is_modular_in(N5, "b")
print(f"for contrast, in the pentagon b is not modular: witness ({N5.label(a)}, {N5.label(c)})")

"""Deciding identities of a nil variety from a finite summary of its theory.

The basis xyz = zyx, xxy = 0 makes every word of length 4 either zero or a
linear word, so a bounded congruence closure decides the whole theory.
"""
from __future__ import annotations

from pathlib import Path

from semivar.engine import decide, theory_summary
from semivar.identities import parse_identity, parse_system

sigma = parse_system((Path(__file__).parent / "data" / "sys2.ids").read_text())
summary = theory_summary(sigma)
print(summary.report())
print()

# Each answer is either a derivation (Holds) or a finite semigroup that
# satisfies the basis and refutes the identity (Fails).
for text in ["xxx = 0", "xyzt = tzyx", "xy = yx", "xyx = 0"]:
    out = decide(sigma, parse_identity(text))
    line = f"{text:14s} {out.status}"
    if out.status == "Fails":
        line += f"  (countermodel of order {out.model.order})"
    print(line)

# xyx = 0 has no countermodel with four or fewer elements: a, b, ab, ba,
# aba and the zero must all differ. decide falls back to the relatively
# free semigroup built from the summary.

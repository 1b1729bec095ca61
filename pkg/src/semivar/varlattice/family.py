"""Finite families closed under join and meet, with element-wise lattice checks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Optional, Sequence, Union

DEFAULT_CAP = 64


class ClosureError(ValueError):
    """Tables are not a lattice, or closure exceeded the size cap."""


@dataclass
class FiniteFamily:
    members: list
    join_table: list[list[int]]
    meet_table: list[list[int]]
    labels: list[str] = field(default_factory=list)

    def __post_init__(self):
        n = len(self.members)
        if not self.labels:
            self.labels = [str(m) for m in self.members]
        for tab in (self.join_table, self.meet_table):
            if len(tab) != n or any(len(row) != n for row in tab):
                raise ClosureError("tables must be square over the members")
            if any(not 0 <= v < n for row in tab for v in row):
                raise ClosureError("table entry outside the family")
        self._check_lattice()

    def _check_lattice(self):
        J, M, r = self.join_table, self.meet_table, range(len(self.members))
        for a in r:
            if J[a][a] != a or M[a][a] != a:
                raise ClosureError(f"{self.labels[a]} is not idempotent")
            for b in r:
                if J[a][b] != J[b][a] or M[a][b] != M[b][a]:
                    raise ClosureError("tables are not commutative")
                if J[a][M[a][b]] != a or M[a][J[a][b]] != a:
                    raise ClosureError("absorption fails")
                for c in r:
                    if J[J[a][b]][c] != J[a][J[b][c]] or M[M[a][b]][c] != M[a][M[b][c]]:
                        raise ClosureError("tables are not associative")

    def __len__(self) -> int:
        return len(self.members)

    def index(self, x) -> int:
        if isinstance(x, int):
            return x
        for i, m in enumerate(self.members):
            if m is x or self.labels[i] == x:
                return i
        for i, m in enumerate(self.members):
            if m == x:
                return i
        raise KeyError(f"{x} is not a member")

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def leq(self, a: int, b: int) -> bool:
        return self.join_table[a][b] == b

    def label(self, i: int) -> str:
        return self.labels[i]

    # ---- construction ----------------------------------------------------

    @classmethod
    def from_tables(cls, labels: Sequence[str], join_table, meet_table) -> "FiniteFamily":
        return cls(list(labels), [list(r) for r in join_table], [list(r) for r in meet_table], list(labels))

    @classmethod
    def from_order(cls, labels: Sequence[str], leq: Callable[[int, int], bool]) -> "FiniteFamily":
        """Lattice from a partial order given on indices."""
        n = len(labels)
        r = range(n)

        def bound(a, b, up):
            if up:
                cands = [c for c in r if leq(a, c) and leq(b, c)]
                best = [c for c in cands if all(leq(c, d) for d in cands)]
            else:
                cands = [c for c in r if leq(c, a) and leq(c, b)]
                best = [c for c in cands if all(leq(d, c) for d in cands)]
            if len(best) != 1:
                raise ClosureError(f"no unique {'join' if up else 'meet'} of {labels[a]}, {labels[b]}")
            return best[0]

        J = [[bound(a, b, True) for b in r] for a in r]
        M = [[bound(a, b, False) for b in r] for a in r]
        return cls.from_tables(labels, J, M)

    @classmethod
    def close(cls, seeds: Sequence, join: Callable, meet: Callable,
              fingerprint: Callable[[object], Hashable], cap: int = DEFAULT_CAP,
              label: Callable[[object], str] = str) -> "FiniteFamily":
        """Close ``seeds`` under ``join`` and ``meet``; members equal iff fingerprints agree.

        Members are ordered canonically by fingerprint.
        """
        members: list = []
        prints: dict = {}

        def add(x) -> int:
            fp = fingerprint(x)
            if fp not in prints:
                if len(members) >= cap:
                    raise ClosureError(f"closure exceeds {cap} members")
                prints[fp] = len(members)
                members.append(x)
            return prints[fp]

        for s in seeds:
            add(s)
        J: dict = {}
        M: dict = {}
        changed = True
        while changed:
            changed = False
            n = len(members)
            for a, b in itertools.combinations_with_replacement(range(n), 2):
                if (a, b) not in J:
                    J[a, b] = add(join(members[a], members[b]))
                    M[a, b] = add(meet(members[a], members[b]))
                    changed = True
        fps = [None] * len(members)
        for fp, i in prints.items():
            fps[i] = fp
        order = sorted(range(len(members)), key=lambda i: _order_key(fps[i]))
        pos = {old: new for new, old in enumerate(order)}
        n = len(members)
        Jt = [[0] * n for _ in range(n)]
        Mt = [[0] * n for _ in range(n)]
        for (a, b), c in J.items():
            Jt[pos[a]][pos[b]] = Jt[pos[b]][pos[a]] = pos[c]
        for (a, b), c in M.items():
            Mt[pos[a]][pos[b]] = Mt[pos[b]][pos[a]] = pos[c]
        ordered = [members[i] for i in order]
        return cls(ordered, Jt, Mt, [label(m) for m in ordered])


def _order_key(fp) -> tuple:
    size = len(fp) if isinstance(fp, (tuple, frozenset, list)) else 0
    return (size, repr(fp))


# ---- element checks -------------------------------------------------------

Pair = tuple[int, int]


def modular_violations(F: FiniteFamily, x) -> list[Pair]:
    x = F.index(x)
    out = []
    for y in range(len(F)):
        for z in range(len(F)):
            if F.leq(y, z) and F.meet(F.join(x, y), z) != F.join(F.meet(x, z), y):
                out.append((y, z))
    return out


def is_modular_in(F: FiniteFamily, x) -> Union[bool, Pair]:
    """True, or the first pair ``y <= z`` with ``(x v y) ^ z != (x ^ z) v y``."""
    bad = modular_violations(F, x)
    return bad[0] if bad else True


def cancellation_witnesses(F: FiniteFamily, x) -> list[Pair]:
    x = F.index(x)
    return [(y, z) for y, z in itertools.combinations(range(len(F)), 2)
            if F.join(x, y) == F.join(x, z) and F.meet(x, y) == F.meet(x, z)]


def is_cancellable_in(F: FiniteFamily, x, among: Optional[Sequence] = None) -> Union[bool, Pair]:
    """True, or a pair ``y != z`` agreeing with ``x`` on both join and meet.

    ``among`` restricts the candidate pairs to the given members.
    """
    wit = cancellation_witnesses(F, x)
    if among is not None:
        allowed = {F.index(a) for a in among}
        wit = [p for p in wit if p[0] in allowed and p[1] in allowed]
    return wit[0] if wit else True


def generated_sublattice(F: FiniteFamily, gens) -> list[int]:
    elems = {F.index(g) for g in gens}
    while True:
        new = {op(a, b) for a in elems for b in elems for op in (F.join, F.meet)} - elems
        if not new:
            return sorted(elems)
        elems |= new


def is_distributive(F: FiniteFamily, elems: Optional[Sequence[int]] = None) -> bool:
    elems = range(len(F)) if elems is None else elems
    return all(F.meet(a, F.join(b, c)) == F.join(F.meet(a, b), F.meet(a, c))
               for a in elems for b in elems for c in elems)


def is_neutral_in(F: FiniteFamily, x) -> bool:
    x = F.index(x)
    n = len(F)
    return all(is_distributive(F, generated_sublattice(F, [x, y, z]))
               for y in range(n) for z in range(y, n))


# ---- small abstract lattices ---------------------------------------------

def pentagon() -> FiniteFamily:
    """N_5: 0 < a < c < 1 and 0 < b < 1 with b incomparable to a and c."""
    labels = ["0", "a", "b", "c", "1"]
    below = {(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4), (3, 4)}
    return FiniteFamily.from_order(labels, lambda i, j: i == j or (i, j) in below)


def diamond() -> FiniteFamily:
    """M_3: three pairwise incomparable atoms."""
    labels = ["0", "a", "b", "c", "1"]
    return FiniteFamily.from_order(
        labels, lambda i, j: i == j or i == 0 or j == 4)


def chain(n: int) -> FiniteFamily:
    return FiniteFamily.from_order([str(i) for i in range(n)], lambda i, j: i <= j)


def boolean_lattice(k: int) -> FiniteFamily:
    subsets = list(range(2 ** k))
    return FiniteFamily.from_order([format(s, f"0{k}b") for s in subsets], lambda i, j: i & j == i)

"""Permutations of {1..n}, subgroups of S_n and the Perm_n operator.

Composition is left to right: ``p * q`` applies ``p`` first, then ``q``, so
``i(pq) = (ip)q``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .identities import IdentitySystem, Plain, canonical_identity, make_permutational, parse_identity


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "Permutation":
        """Cycle notation: ``(12)(34)``, ``(1 2 3)``, ``()``."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))+", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            if "," in body or " " in body.strip():
                pts = [int(p) for p in re.split(r"[,\s]+", body.strip()) if p]
            else:
                pts = [int(c) for c in body]
            if len(set(pts)) != len(pts) or any(p < 1 for p in pts):
                raise ValueError(f"bad cycle {body!r}")
            cycles.append(pts)
        top = max((max(c) for c in cycles if c), default=1)
        n = top if n is None else n
        if top > n:
            raise ValueError(f"point {top} exceeds degree {n}")
        # product of cycles, applied left to right
        perm = cls.identity(n)
        for c in cycles:
            cyc = list(range(1, n + 1))
            for a, b in zip(c, c[1:] + c[:1]):
                cyc[a - 1] = b
            perm = perm * cls(tuple(cyc))
        return perm

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, self.n + 1):
            if i in seen or self(i) == i:
                continue
            c, j = [], i
            while j not in seen:
                seen.add(j)
                c.append(j)
                j = self(j)
            out.append(tuple(c))
        return out

    def __str__(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        sep = "," if self.n > 9 else ""
        return "".join("(" + sep.join(str(i) for i in c) + ")" for c in cs)

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def order_key(self):
        return self.images


def perm(text: str, n: int) -> Permutation:
    return Permutation.parse(text, n)


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class PermGroup:
    n: int
    generators: frozenset
    elements: frozenset

    def __eq__(self, other) -> bool:
        return isinstance(other, PermGroup) and self.n == other.n and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.n, self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def __le__(self, other: "PermGroup") -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: "PermGroup") -> bool:
        return self.elements < other.elements

    def sorted_elements(self) -> list[Permutation]:
        return sorted(self.elements, key=Permutation.order_key)

    def name(self) -> str:
        """Paper-style name: T, S_n, gr{...}, Stab_i(n) or an element list."""
        if self.order == 1:
            return "T"
        if self.order == _factorial(self.n):
            return f"S_{self.n}"
        for p in self.sorted_elements():
            if self == generated(self.n, [p]):
                return f"gr{{{p}}}"
        for i in range(1, self.n + 1):
            if self == stabilizer(i, self.n):
                return f"Stab_{i}({self.n})"
        gens = _small_generating_set(self)
        return "gr{" + ", ".join(str(g) for g in gens) + "}"

    def __str__(self) -> str:
        return self.name()


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _small_generating_set(G: PermGroup) -> list[Permutation]:
    gens: list[Permutation] = []
    H = generated(G.n, [])
    for p in G.sorted_elements():
        if p not in H:
            gens.append(p)
            H = generated(G.n, gens)
        if H == G:
            break
    return gens


def generated(n: int, gens: Iterable[Permutation]) -> PermGroup:
    gens = frozenset(gens)
    for g in gens:
        if g.n != n:
            raise DegreeMismatch(f"generator {g} has degree {g.n}, expected {n}")
    e = Permutation.identity(n)
    elements = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b not in elements:
                    elements.add(b)
                    nxt.append(b)
        frontier = nxt
    return PermGroup(n, gens, frozenset(elements))


def symmetric(n: int) -> PermGroup:
    return _symmetric(n)


@lru_cache(maxsize=None)
def _symmetric(n: int) -> PermGroup:
    elems = frozenset(Permutation(p) for p in itertools.permutations(range(1, n + 1)))
    return PermGroup(n, elems, elems)


def trivial(n: int) -> PermGroup:
    return generated(n, [])


def group_from_elements(n: int, elements: Iterable[Permutation]) -> PermGroup:
    """Wrap a set already known to be a subgroup; raises if it is not closed."""
    elements = frozenset(elements)
    G = generated(n, elements)
    if G.elements != elements:
        raise ValueError("element set is not a subgroup")
    return PermGroup(n, elements, elements)


def is_subgroup(n: int, elements: Iterable[Permutation]) -> bool:
    elements = frozenset(elements)
    if Permutation.identity(n) not in elements:
        return False
    return all(a * b.inverse() in elements for a in elements for b in elements)


def stabilizer(i: int, n: int) -> PermGroup:
    if not 1 <= i <= n:
        raise ValueError(f"point {i} outside 1..{n}")
    elems = frozenset(p for p in symmetric(n).elements if p(i) == i)
    return PermGroup(n, elems, elems)


def _check_degree(G: PermGroup, H: PermGroup):
    if G.n != H.n:
        raise DegreeMismatch(f"degrees {G.n} and {H.n} differ")


def meet(G: PermGroup, H: PermGroup) -> PermGroup:
    _check_degree(G, H)
    elems = G.elements & H.elements
    return PermGroup(G.n, elems, elems)


def join(G: PermGroup, H: PermGroup) -> PermGroup:
    _check_degree(G, H)
    return generated(G.n, G.generators | H.generators)


def is_maximal(G: PermGroup, n: int) -> bool:
    """Is ``G`` a maximal proper subgroup of S_n?"""
    S = symmetric(n)
    if G.n != n or G == S:
        return False
    return all(join(G, generated(n, [p])) == S for p in S.elements - G.elements)


@dataclass(frozen=True)
class SubgroupLattice:
    n: int
    subgroups: tuple[PermGroup, ...]
    covers: tuple[tuple[int, int], ...]  # (i, j): subgroups[i] is covered by subgroups[j]

    def to_dot(self) -> str:
        lines = [f"digraph Sub_S{self.n} {{"]
        for i, G in enumerate(self.subgroups):
            lines.append(f'  g{i} [label="{G.name()}"];')
        for i, j in self.covers:
            lines.append(f"  g{i} -> g{j};")
        lines.append("}")
        return "\n".join(lines)

    def edge_list(self) -> list[tuple[str, str]]:
        return [(self.subgroups[i].name(), self.subgroups[j].name()) for i, j in self.covers]


MAX_LATTICE_DEGREE = 4


def all_subgroups(n: int) -> SubgroupLattice:
    """Every subgroup of S_n with its Hasse diagram (n <= 4)."""
    from .engine.congruence import ResourceError

    if n > MAX_LATTICE_DEGREE:
        raise ResourceError(f"subgroup lattice of S_{n} not supported (n <= {MAX_LATTICE_DEGREE})")
    return _all_subgroups(n)


@lru_cache(maxsize=None)
def _all_subgroups(n: int) -> SubgroupLattice:
    S = symmetric(n)
    found = {generated(n, [p]) for p in S.elements}
    # joins of subgroups reach every subgroup from the cyclic ones
    while True:
        new = {join(G, H) for G in found for H in found} - found
        if not new:
            break
        found |= new
    subs = sorted(found, key=lambda G: (G.order, sorted(p.images for p in G.elements)))
    covers = []
    for i, G in enumerate(subs):
        for j, H in enumerate(subs):
            if G < H and not any(G < K < H for K in subs):
                covers.append((i, j))
    return SubgroupLattice(n, tuple(subs), tuple(covers))


def subgroups_by_brute_force(n: int) -> list[PermGroup]:
    """Every subset of S_n that is closed; exponential, for cross-checks at tiny n."""
    elems = sorted(symmetric(n).elements, key=Permutation.order_key)
    e = Permutation.identity(n)
    rest = [p for p in elems if p != e]
    out = []
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            s = frozenset(combo) | {e}
            if all(a * b in s for a in s for b in s):
                out.append(PermGroup(n, s, s))
    return out


# --- Perm_n ---------------------------------------------------------------

@dataclass(frozen=True)
class PermResult:
    lower: PermGroup
    upper: PermGroup

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def __str__(self) -> str:
        if self.exact:
            return f"{self.lower.name()} (exact)"
        return f"between {self.lower.name()} and {self.upper.name()}"


def perm_n(V, n: int, budget=None) -> PermResult:
    """Perm_n of a variety descriptor (anything with ``holds``) or an identity system."""
    if n < 2:
        raise ValueError("n must be at least 2")
    S = symmetric(n)
    if isinstance(V, IdentitySystem):
        from .engine.decide import Budget, Fails, Holds, decide
        from .engine.summary import theory_summary

        budget = budget or Budget()
        summary = theory_summary(V, ceiling=budget.ceiling)
        if summary.total:
            return perm_n(summary, n)
        lower, refuted = set(), set()
        for p in S.elements:
            out = decide(V, make_permutational(n, p), budget)
            if isinstance(out, Holds):
                lower.add(p)
            elif isinstance(out, Fails):
                refuted.add(p)
        upper = S.elements - refuted
        return PermResult(PermGroup(n, frozenset(lower), frozenset(lower)),
                          PermGroup(n, frozenset(upper), frozenset(upper)))
    elems = frozenset(p for p in S.elements if V.holds(make_permutational(n, p)))
    G = PermGroup(n, elems, elems)
    return PermResult(G, G)


# --- lower bounds from the classical three-letter cases -------------------

XYZT_XZTY = parse_identity("xyzt = xzty")


def _as_seed(seed) -> tuple[str, Optional[Permutation]]:
    if isinstance(seed, Permutation):
        if seed.n != 3 or seed.is_identity:
            raise ValueError("seed permutation must be a non-trivial element of S_3")
        return "p3", seed
    if isinstance(seed, str):
        seed = parse_identity(seed)
    if isinstance(seed, Plain):
        c = canonical_identity(seed)
        if canonical_identity(XYZT_XZTY) in (c, canonical_identity(Plain(seed.rhs, seed.lhs))):
            return "xyzt", None
        if len(c.lhs) == 3 and c.lhs.letters == (0, 1, 2) and sorted(c.rhs.letters) == [0, 1, 2]:
            p = Permutation(tuple(a + 1 for a in c.rhs.letters))
            if not p.is_identity:
                return "p3", p
        flipped = canonical_identity(Plain(seed.rhs, seed.lhs))
        if len(flipped.lhs) == 3 and flipped.lhs.letters == (0, 1, 2) and sorted(flipped.rhs.letters) == [0, 1, 2]:
            p = Permutation(tuple(a + 1 for a in flipped.rhs.letters))
            if not p.is_identity:
                return "p3", p
    raise ValueError(f"unsupported seed {seed}")


def pollak_lower_bound(seed, n: int) -> PermGroup:
    """Subgroup of Perm_n(V) guaranteed by a length-3 permutational identity or by xyzt = xzty."""
    kind, p = _as_seed(seed)
    if kind == "p3":
        if n < 4:
            raise ValueError("bounds from length-3 identities need n >= 4")
        if p == Permutation.parse("(12)", 3):
            return stabilizer(n, n)
        if p == Permutation.parse("(23)", 3):
            return stabilizer(1, n)
        return symmetric(n)
    if n < 5:
        raise ValueError("the xyzt = xzty bound needs n >= 5")
    return stabilizer(1, n)

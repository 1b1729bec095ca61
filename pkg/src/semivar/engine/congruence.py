"""Bounded congruence closure on the free semigroup.

The universe is every word of length ``<= B`` over the letters ``0..m-1``
plus one extra node standing for the zero element.  Instances of plain
identities are merged pairwise, instances of ``u = 0`` are merged with the
zero node, and the closure is kept compatible with one-letter contexts
(which generates compatibility with all contexts inside the bound).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from ..identities import Identity, IdentitySystem, Plain, Zero
from ..words import Word, iter_tuples

DEFAULT_WORD_CAP = 400_000
DEFAULT_INSTANCE_CAP = 2_000_000


class ResourceError(RuntimeError):
    """The requested computation exceeds a configured cap."""


def _occurrences(w: tuple[int, ...]) -> dict[int, int]:
    occ: dict[int, int] = {}
    for a in w:
        occ[a] = occ.get(a, 0) + 1
    return occ


def _length_vectors(letters, occ_l, occ_r, B):
    """Assign a length >= 1 to each letter so both instantiated sides fit in B."""
    n = len(letters)
    out = []

    def rec(i, used_l, used_r, acc):
        if i == n:
            out.append(tuple(acc))
            return
        a = letters[i]
        cl, cr = occ_l.get(a, 0), occ_r.get(a, 0)
        # remaining letters need at least length 1 each
        rest_l = sum(occ_l.get(b, 0) for b in letters[i + 1:])
        rest_r = sum(occ_r.get(b, 0) for b in letters[i + 1:])
        k = 1
        while used_l + cl * k + rest_l <= B and used_r + cr * k + rest_r <= B:
            acc.append(k)
            rec(i + 1, used_l + cl * k, used_r + cr * k, acc)
            acc.pop()
            k += 1
            if cl == 0 and cr == 0:
                break

    rec(0, 0, 0, [])
    return out


def instances(lhs: tuple[int, ...], rhs: Optional[tuple[int, ...]], m: int, B: int
              ) -> Iterator[tuple[tuple[int, ...], Optional[tuple[int, ...]]]]:
    """All substitution instances over ``m`` letters with both sides of length <= B.

    ``rhs=None`` marks a zero identity; the instance then pairs with ``None``.
    """
    r = rhs if rhs is not None else ()
    letters = sorted(set(lhs) | set(r))
    occ_l, occ_r = _occurrences(lhs), _occurrences(r)
    if rhs is None:
        occ_r = {}
    for lens in _length_vectors(letters, occ_l, occ_r, B):
        pools = [list(itertools.product(range(m), repeat=k)) for k in lens]
        for images in itertools.product(*pools):
            theta = dict(zip(letters, images))
            left = tuple(itertools.chain.from_iterable(theta[a] for a in lhs))
            if rhs is None:
                yield left, None
            else:
                right = tuple(itertools.chain.from_iterable(theta[a] for a in rhs))
                yield left, right


@dataclass
class Congruence:
    """A saturated bounded congruence.  Word classes are read through :meth:`find`."""

    system: IdentitySystem
    m: int
    B: int
    words: list[tuple[int, ...]]
    index: dict[tuple[int, ...], int]
    parent: list[int]
    merges: int = 0
    instance_count: int = 0
    _classes: Optional[dict[int, list[int]]] = field(default=None, repr=False)

    @property
    def zero_node(self) -> int:
        return len(self.words)

    def _root(self, i: int) -> int:
        p = self.parent
        while p[i] != i:
            p[i] = p[p[i]]
            i = p[i]
        return i

    def id_of(self, w) -> int:
        t = tuple(w.letters) if isinstance(w, Word) else tuple(w)
        try:
            return self.index[t]
        except KeyError:
            raise KeyError(f"{t} is outside the universe (m={self.m}, B={self.B})") from None

    def find(self, w) -> int:
        return self._root(self.id_of(w))

    def same(self, u, v) -> bool:
        return self.find(u) == self.find(v)

    @property
    def zero_root(self) -> int:
        return self._root(self.zero_node)

    def is_zero(self, w) -> bool:
        return self.find(w) == self.zero_root

    def classes(self) -> list[list[Word]]:
        """Word classes in shortlex order of their least member; the zero node is omitted."""
        if self._classes is None:
            groups: dict[int, list[int]] = {}
            for i in range(len(self.words)):
                groups.setdefault(self._root(i), []).append(i)
            self._classes = groups
        out = [[Word(self.words[i]) for i in members] for members in self._classes.values()]
        out.sort(key=lambda c: c[0].sort_key())
        return out

    def zero_class(self) -> list[Word]:
        z = self.zero_root
        return [Word(w) for i, w in enumerate(self.words) if self._root(i) == z]


def saturate(sigma: IdentitySystem, m: int, B: int, *,
             word_cap: int = DEFAULT_WORD_CAP,
             instance_cap: int = DEFAULT_INSTANCE_CAP) -> Congruence:
    if m < 1 or B < 1:
        raise ValueError("need m >= 1 and B >= 1")
    size = sum(m ** k for k in range(1, B + 1))
    if size > word_cap:
        raise ResourceError(f"universe of {size} words exceeds cap {word_cap}")

    words = list(iter_tuples(m, B))
    index = {w: i for i, w in enumerate(words)}
    zero = len(words)
    parent = list(range(zero + 1))
    # shortest member of each class (None once the class holds the zero node)
    short: list[Optional[tuple[int, ...]]] = list(words) + [None]
    letters = [(a,) for a in range(m)]

    def root(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def left(r, a):
        s = short[r]
        if s is None:
            return zero
        if len(s) < B:
            return index[a + s]
        return None

    def right(r, a):
        s = short[r]
        if s is None:
            return zero
        if len(s) < B:
            return index[s + a]
        return None

    pending: list[tuple[int, int]] = []
    n_inst = 0
    for ident in sigma:
        if isinstance(ident, Zero):
            gen = instances(ident.u.letters, None, m, B)
        else:
            gen = instances(ident.lhs.letters, ident.rhs.letters, m, B)
        for lhs, rhs in gen:
            n_inst += 1
            if n_inst > instance_cap:
                raise ResourceError(f"more than {instance_cap} identity instances")
            pending.append((index[lhs], zero if rhs is None else index[rhs]))

    merges = 0
    while pending:
        i, j = pending.pop()
        ri, rj = root(i), root(j)
        if ri == rj:
            continue
        for a in letters:
            li, lj = left(ri, a), left(rj, a)
            if li is not None and lj is not None:
                pending.append((li, lj))
            gi, gj = right(ri, a), right(rj, a)
            if gi is not None and gj is not None:
                pending.append((gi, gj))
        # keep the zero node as a root so its class is easy to spot
        if rj == zero or (ri != zero and short[rj] is not None and short[ri] is not None
                          and (len(short[rj]), short[rj]) < (len(short[ri]), short[ri])):
            ri, rj = rj, ri
        parent[rj] = ri
        if short[ri] is not None and short[rj] is not None:
            if (len(short[rj]), short[rj]) < (len(short[ri]), short[ri]):
                short[ri] = short[rj]
        elif ri != zero:
            short[ri] = None
        merges += 1

    return Congruence(sigma, m, B, words, index, parent, merges, n_inst)

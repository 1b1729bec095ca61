"""Finite semigroups as countermodel certificates."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from ..identities import Identity, IdentitySystem, Plain, expand_zero
from ..words import Word
from .congruence import ResourceError

DEFAULT_MAX_ORDER = 4
HARD_ORDER_CAP = 5
GRID_CAP = 20_000_000


class NotAssociative(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    table: np.ndarray
    name: str = ""

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
            raise ValueError("multiplication table must be a non-empty square")
        k = t.shape[0]
        if t.min() < 0 or t.max() >= k:
            raise ValueError("table entries must be element indices")
        # (ab)c == a(bc) for every triple at once
        if not np.array_equal(t[t, :], t[:, t]):
            raise NotAssociative("table is not associative")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteSemigroup) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def rows(self) -> list[list[int]]:
        return self.table.tolist()

    def __str__(self) -> str:
        head = self.name or f"semigroup of order {self.order}"
        return head + "\n" + "\n".join(" ".join(str(v) for v in row) for row in self.rows())


def semilattice2() -> FiniteSemigroup:
    return FiniteSemigroup(np.array([[0, 0], [0, 1]]), "2-element semilattice")


def left_zero2() -> FiniteSemigroup:
    return FiniteSemigroup(np.array([[0, 0], [1, 1]]), "2-element left-zero semigroup")


def _evaluate(table: np.ndarray, word: Word, axes: dict[int, np.ndarray]) -> np.ndarray:
    acc = axes[word[0]]
    for a in word.letters[1:]:
        acc = table[acc, axes[a]]
    return acc


def plain_holds(S: FiniteSemigroup, ident: Plain) -> bool:
    letters = sorted(ident.letters())
    k, n = len(letters), S.order
    if n ** k > GRID_CAP:
        raise ResourceError(f"{n}^{k} assignments exceed the grid cap")
    grids = np.meshgrid(*[np.arange(n)] * k, indexing="ij", sparse=True)
    axes = dict(zip(letters, grids))
    left = _evaluate(S.table, ident.lhs, axes)
    right = _evaluate(S.table, ident.rhs, axes)
    return bool(np.all(np.broadcast_to(left == right, np.broadcast_shapes(left.shape, right.shape))))


def check_model(S: FiniteSemigroup, ident: Identity) -> bool:
    return all(plain_holds(S, p) for p in expand_zero(ident))


def satisfies(S: FiniteSemigroup, sigma: Iterable[Identity]) -> bool:
    return all(check_model(S, i) for i in sigma)


def violating_assignment(S: FiniteSemigroup, ident: Identity) -> Optional[dict[int, int]]:
    for p in expand_zero(ident):
        letters = sorted(p.letters())
        for vals in itertools.product(range(S.order), repeat=len(letters)):
            env = dict(zip(letters, vals))
            if evaluate(S, p.lhs, env) != evaluate(S, p.rhs, env):
                return env
    return None


def evaluate(S: FiniteSemigroup, w: Word, env: dict[int, int]) -> int:
    t = S.table
    acc = env[w[0]]
    for a in w.letters[1:]:
        acc = int(t[acc, env[a]])
    return acc


def _labelled_tables(n: int) -> list[tuple[int, ...]]:
    """Every associative n x n table, by backtracking in row-major order."""
    cells = n * n
    t = [-1] * cells

    def consistent() -> bool:
        for x in range(n):
            for y in range(n):
                xy = t[x * n + y]
                if xy < 0:
                    continue
                for z in range(n):
                    yz = t[y * n + z]
                    if yz < 0:
                        continue
                    l, r = t[xy * n + z], t[x * n + yz]
                    if l >= 0 and r >= 0 and l != r:
                        return False
        return True

    out = []

    def rec(c: int):
        if c == cells:
            out.append(tuple(t))
            return
        for v in range(n):
            t[c] = v
            if consistent():
                rec(c + 1)
        t[c] = -1

    rec(0)
    return out


def _canonical_table(tab: tuple[int, ...], n: int, perms) -> tuple[int, ...]:
    best = None
    for p in perms:
        # relabel element i as p[i]
        new = [0] * (n * n)
        for x in range(n):
            for y in range(n):
                new[p[x] * n + p[y]] = p[tab[x * n + y]]
        cand = tuple(new)
        if best is None or cand < best:
            best = cand
    return best


_SEMIGROUPS: dict[int, list[FiniteSemigroup]] = {}


def semigroups_of_order(n: int) -> list[FiniteSemigroup]:
    """All semigroups of order ``n`` up to isomorphism (cached)."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > HARD_ORDER_CAP:
        raise ResourceError(f"order {n} above hard cap {HARD_ORDER_CAP}")
    if n not in _SEMIGROUPS:
        perms = list(itertools.permutations(range(n)))
        seen = set()
        for tab in _labelled_tables(n):
            seen.add(_canonical_table(tab, n, perms))
        _SEMIGROUPS[n] = [
            FiniteSemigroup(np.array(tab).reshape(n, n), f"S{n}.{i}")
            for i, tab in enumerate(sorted(seen))
        ]
    return _SEMIGROUPS[n]


def count_labelled(n: int) -> int:
    return len(_labelled_tables(n))


def models_of(sigma: IdentitySystem, max_order: int) -> list[FiniteSemigroup]:
    return [S for n in range(1, max_order + 1) for S in semigroups_of_order(n) if satisfies(S, sigma)]


def find_countermodel(sigma: IdentitySystem, ident: Identity,
                      max_order: int = DEFAULT_MAX_ORDER) -> Optional[FiniteSemigroup]:
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    if max_order > HARD_ORDER_CAP:
        raise ResourceError(f"max_order {max_order} above hard cap {HARD_ORDER_CAP}")
    for n in range(1, max_order + 1):
        for S in semigroups_of_order(n):
            if not check_model(S, ident) and satisfies(S, sigma):
                return S
    return None

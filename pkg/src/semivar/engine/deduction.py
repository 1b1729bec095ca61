"""Deductions of ``u = v`` from the identities of two varieties.

A side may be an :class:`IdentitySystem`, in which case each step rewrites one
factor by an instance of a basis identity, or any object with ``holds(identity)``
(a variety descriptor), in which case a step may be any identity of that
variety between words of the search universe.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from ..identities import IdentitySystem, Plain, expand_zero
from ..words import Word, as_word, content
from .decide import Budget, Holds, decide

DEFAULT_MAX_STEPS = 8


@dataclass(frozen=True)
class Deduction:
    words: tuple[Word, ...]
    tags: tuple[str, ...]

    def __post_init__(self):
        if len(self.tags) != len(self.words) - 1:
            raise ValueError("need exactly one tag per step")
        if any(t not in ("A", "B") for t in self.tags):
            raise ValueError("step tags must be 'A' or 'B'")

    @property
    def steps(self) -> int:
        return len(self.tags)

    def __str__(self) -> str:
        lines = [f"0: {self.words[0]}"]
        for i, (w, tag) in enumerate(zip(self.words[1:], self.tags), start=1):
            lines.append(f"{i}: {w} [{tag}]")
        return "\n".join(lines)


def _match(pattern: tuple[int, ...], w: tuple[int, ...], start: int) -> Iterator[tuple[dict, int]]:
    """Bind pattern letters to non-empty factors of ``w`` beginning at ``start``."""

    def rec(k: int, pos: int, theta: dict):
        if k == len(pattern):
            yield dict(theta), pos
            return
        a = pattern[k]
        if a in theta:
            img = theta[a]
            if w[pos:pos + len(img)] == img:
                yield from rec(k + 1, pos + len(img), theta)
            return
        remaining = len(pattern) - k - 1
        for end in range(pos + 1, len(w) - remaining + 1):
            theta[a] = w[pos:end]
            yield from rec(k + 1, end, theta)
            del theta[a]

    yield from rec(0, start, {})


def rewrite_neighbours(w: tuple[int, ...], rules: list[tuple[tuple, tuple]],
                       alphabet: list[int], max_len: int) -> set[tuple[int, ...]]:
    out = set()
    for s, t in rules:
        free = sorted(set(t) - set(s))
        for i in range(len(w)):
            for theta, j in _match(s, w, i):
                base = len(w) - (j - i)
                fixed = sum(len(theta[a]) for a in t if a in theta)
                slack = max_len - base - fixed
                if slack < len([a for a in t if a not in theta]):
                    continue
                for extra in _free_images(free, t, alphabet, slack):
                    th = {**theta, **extra}
                    img = tuple(itertools.chain.from_iterable(th[a] for a in t))
                    cand = w[:i] + img + w[j:]
                    if cand != w and len(cand) <= max_len:
                        out.add(cand)
    return out


def _free_images(free, t, alphabet, slack):
    if not free:
        yield {}
        return
    occ = {a: t.count(a) for a in free}

    def rec(k, budget, acc):
        if k == len(free):
            yield dict(acc)
            return
        a = free[k]
        n = 1
        while occ[a] * n <= budget - sum(occ[b] for b in free[k + 1:]):
            for img in itertools.product(alphabet, repeat=n):
                acc[a] = img
                yield from rec(k + 1, budget - occ[a] * n, acc)
            n += 1
        acc.pop(a, None)

    yield from rec(0, slack, {})


def _rules(sigma: IdentitySystem) -> list[tuple[tuple, tuple]]:
    rules = []
    for ident in sigma:
        for p in expand_zero(ident):
            rules.append((p.lhs.letters, p.rhs.letters))
            rules.append((p.rhs.letters, p.lhs.letters))
    return rules


def _neighbour_fn(side, alphabet: list[int], max_len: int) -> Callable[[tuple], set]:
    if isinstance(side, IdentitySystem):
        rules = _rules(side)
        return lambda w: rewrite_neighbours(w, rules, alphabet, max_len)
    # variety oracle: bucket the bounded universe by class key
    universe = [t for n in range(1, max_len + 1) for t in itertools.product(alphabet, repeat=n)]
    buckets: dict = {}
    for t in universe:
        buckets.setdefault(side.key(Word(t)), set()).add(t)
    return lambda w: buckets.get(side.key(Word(w)), set()) - {w}


def _order(t: tuple) -> tuple:
    return (len(t), t)


def find_deduction(A, B, u, v, max_len: Optional[int] = None,
                   max_steps: int = DEFAULT_MAX_STEPS) -> Optional[Deduction]:
    """Shortest deduction from ``u`` to ``v``; ties go to the shortlex-least word sequence."""
    u, v = as_word(u), as_word(v)
    if max_len is None:
        max_len = max(len(u), len(v)) + 2
    alphabet = sorted(content(u) | content(v))
    nbr_a = _neighbour_fn(A, alphabet, max_len)
    nbr_b = _neighbour_fn(B, alphabet, max_len)
    cache: dict = {}

    def nbrs(w):
        if w not in cache:
            a, b = nbr_a(w), nbr_b(w)
            cache[w] = {x: ("A" if x in a else "B") for x in a | b}
        return cache[w]

    src, dst = u.letters, v.letters
    if src == dst:
        return Deduction((u,), ())
    # distances measured from the target so the walk from u can be greedy
    dist = {dst: 0}
    frontier = deque([dst])
    while frontier and src not in dist:
        w = frontier.popleft()
        if dist[w] >= max_steps:
            continue
        for x in nbrs(w):
            if x not in dist:
                dist[x] = dist[w] + 1
                frontier.append(x)
    if src not in dist:
        return None
    words, tags = [src], []
    cur = src
    while cur != dst:
        options = sorted((x for x in nbrs(cur) if dist.get(x) == dist[cur] - 1), key=_order)
        nxt = options[0]
        tags.append(nbrs(cur)[nxt])
        words.append(nxt)
        cur = nxt
    return Deduction(tuple(Word(w) for w in words), tuple(tags))


def _step_holds(side, ident: Plain, budget: Budget) -> bool:
    if isinstance(side, IdentitySystem):
        return isinstance(decide(side, ident, budget), Holds)
    return side.holds(ident)


def verify_deduction(d: Deduction, A, B, budget: Budget = Budget()) -> bool:
    for w0, w1, tag in zip(d.words, d.words[1:], d.tags):
        if w0 == w1:
            return False
        side = A if tag == "A" else B
        if not _step_holds(side, Plain(w0, w1), budget):
            return False
    return True

"""Total theory summaries for bounded-nil varieties.

A summary is *total* at effective bound ``b`` when, among words of length
``b``, every non-linear word is zero and the linear words are either all zero
(``tail="zero"``) or all equal to each other for a fixed content
(``tail="linear"``).  Either condition propagates to every longer word, so
short words plus the tail rule decide every identity.

The ``linear`` tail additionally requires that the semigroup of finite sets
under disjoint union (with overlap sent to 0) satisfies the basis; that model
keeps every linear word non-zero and separates different contents.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from ..identities import Identity, IdentitySystem, Zero
from ..words import Word, canonical_words, is_linear
from .congruence import Congruence, ResourceError, saturate

ZERO = "0"
DEFAULT_CEILING = 7


def linear_model_satisfies(sigma: IdentitySystem) -> bool:
    """Does the disjoint-union set semigroup satisfy every identity of ``sigma``?"""
    for ident in sigma:
        if isinstance(ident, Zero):
            if is_linear(ident.u):
                return False
            continue
        lin_l, lin_r = is_linear(ident.lhs), is_linear(ident.rhs)
        if lin_l != lin_r:
            return False
        if lin_l and set(ident.lhs) != set(ident.rhs):
            return False
    return True


def _sorted_renaming(t: tuple[int, ...]) -> tuple[int, ...]:
    ren = {a: i for i, a in enumerate(sorted(set(t)))}
    return tuple(ren[a] for a in t)


@dataclass
class TheorySummary:
    system: IdentitySystem
    congruence: Congruence
    bound: Optional[int]
    total: bool
    tail: Optional[str] = None

    @property
    def m(self) -> int:
        return self.congruence.m

    @property
    def has_zero(self) -> bool:
        return bool(self.system.zero_identities)

    def key(self, w) -> object:
        """Class key of ``w``: ``u = v`` holds iff ``key(u) == key(v)``.

        Exact for total summaries; for partial summaries only words that fit
        the saturation universe are accepted and equal keys mean "derived".
        """
        t = tuple(w.letters) if isinstance(w, Word) else tuple(w)
        if self.total and len(t) >= self.bound:
            if len(set(t)) < len(t) or self.tail == "zero":
                return ZERO
            return ("lin", frozenset(t))
        cong = self.congruence
        r = cong.find(_sorted_renaming(t))
        if self.has_zero and r == cong.zero_root:
            return ZERO
        return (frozenset(t), r)

    def is_zero(self, w) -> bool:
        return self.key(w) == ZERO

    def holds(self, ident: Identity) -> bool:
        if isinstance(ident, Zero):
            return self.key(ident.u) == ZERO
        return self.key(ident.lhs) == self.key(ident.rhs)

    @property
    def zero_class(self) -> Optional[int]:
        return self.congruence.zero_root if self.has_zero else None

    def standard_words(self, max_len: Optional[int] = None):
        """Words whose content is exactly ``{0..k-1}``, in shortlex order."""
        top = (self.bound - 1) if (self.total and max_len is None) else (max_len or self.congruence.B)
        for n in range(1, top + 1):
            for t in itertools.product(range(n), repeat=n):
                k = len(set(t))
                if set(t) == set(range(k)):
                    yield Word(t)

    def nonzero_classes(self) -> list[list[Word]]:
        groups: dict = {}
        for w in self.standard_words():
            key = self.key(w)
            if key != ZERO:
                groups.setdefault(key, []).append(w)
        return list(groups.values())

    def report(self) -> str:
        lines = [
            f"system: {'; '.join(str(i) for i in self.system)}",
            f"saturation: m={self.congruence.m} B={self.congruence.B}",
            f"total: {'yes' if self.total else 'no'}",
        ]
        if not self.total:
            return "\n".join(lines) + "\n"
        classes = self.nonzero_classes()
        lines.append(f"effective bound: {self.bound}")
        lines.append(f"tail: {self.tail}")
        lines.append(f"nonzero classes below bound: {len(classes)}")
        zero_words = sum(1 for w in self.standard_words() if self.key(w) == ZERO)
        lines.append(f"zero words below bound: {zero_words}")
        for i, c in enumerate(classes):
            for w in c:
                lines.append(f"  [{i}] {w}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        d = {
            "saturation": {"m": self.congruence.m, "B": self.congruence.B},
            "total": self.total,
            "effective_bound": self.bound,
            "tail": self.tail,
        }
        if self.total:
            classes = self.nonzero_classes()
            d["nonzero_classes"] = [[str(w) for w in c] for c in classes]
        return d


def _total_at(cong: Congruence, n: int, sym_ok: bool) -> Optional[str]:
    """Tail type if length ``n`` satisfies the totality condition, else None."""
    z = cong.zero_root
    linear_roots = set()
    for w in canonical_words(n, n):
        r = cong.find(w)
        if is_linear(w):
            continue
        if r != z:
            return None
    for perm in itertools.permutations(range(n)):
        linear_roots.add(cong.find(perm))
    if linear_roots == {z}:
        return "zero"
    if z in linear_roots or len(linear_roots) != 1:
        return None
    if n >= 2 and sym_ok:
        return "linear"
    return None


def summarize(sigma: IdentitySystem, cong: Congruence) -> TheorySummary:
    """Build a summary from one saturation, choosing the least passing length."""
    if not sigma.zero_identities:
        return TheorySummary(sigma, cong, None, False)
    for u in sigma.zero_identities:
        if len(set(u.u)) <= cong.m and len(u.u) <= cong.B:
            assert cong.is_zero(_sorted_renaming(u.u.letters)), f"zero witness {u.u} not in zero class"
    sym_ok = linear_model_satisfies(sigma)
    for n in range(1, min(cong.m, cong.B) + 1):
        tail = _total_at(cong, n, sym_ok)
        if tail is not None:
            return TheorySummary(sigma, cong, n, True, tail)
    return TheorySummary(sigma, cong, None, False)


def theory_summary(sigma: IdentitySystem, m: Optional[int] = None, B: Optional[int] = None, *,
                   ceiling: int = DEFAULT_CEILING) -> TheorySummary:
    """Summary of ``var sigma``.

    With explicit ``m``/``B`` a single saturation is used.  Otherwise the
    bound schedule saturates at ``m = L`` letters and bound ``L + 1`` for
    ``L`` from the longest identity side upwards, stopping at the first total
    summary or when the bound would pass ``ceiling``.
    """
    if B is not None or m is not None:
        B = B if B is not None else max(sigma.max_side_length() + 1, 2)
        m = m if m is not None else max(B - 1, 1)
        return summarize(sigma, saturate(sigma, m, B))
    return _scheduled(sigma, ceiling)


def _start_length(sigma: IdentitySystem) -> int:
    return max(2, sigma.max_side_length())


_CACHE: dict = {}


def _schedule(sigma: IdentitySystem, ceiling: int) -> TheorySummary:
    L = _start_length(sigma)
    best = None
    while L + 1 <= ceiling:
        try:
            cong = saturate(sigma, L, L + 1)
        except ResourceError:
            break
        best = summarize(sigma, cong)
        if best.total or not sigma.zero_identities:
            return best
        L += 1
    if best is None:
        L = _start_length(sigma)
        best = summarize(sigma, saturate(sigma, L, L + 1))
    return best


def _scheduled(sigma: IdentitySystem, ceiling: int) -> TheorySummary:
    key = (sigma.key(), ceiling)
    if key not in _CACHE:
        _CACHE[key] = _schedule(sigma, ceiling)
    return _CACHE[key]

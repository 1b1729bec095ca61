"""Words of the free semigroup over a countable alphabet.

Letters are plain ``int`` indices.  Indices 0..25 display as single
characters (``x y z t u v w s r q ...``), everything from 26 on displays as
``x0, x1, x2, ...``.  Display names are a presentation layer only.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional

Letter = int
Renaming = Mapping[Letter, Letter]

NAMED = "xyztuvwsrqponmlkjihgfedcba"
SUBSCRIPT_BASE = len(NAMED)

_TOKEN = re.compile(r"\s*(?:(x\d+)|([a-z]))\s*(?:\^\s*(\d+))?")


class DomainError(ValueError):
    """A letter of the word is outside the domain of a map."""


def letter_name(a: Letter) -> str:
    if a < 0:
        raise ValueError(f"negative letter index {a}")
    if a < SUBSCRIPT_BASE:
        return NAMED[a]
    return f"x{a - SUBSCRIPT_BASE}"


def letter(name: str) -> Letter:
    """Inverse of :func:`letter_name`."""
    if len(name) == 1 and name in NAMED:
        return NAMED.index(name)
    if name.startswith("x") and name[1:].isdigit():
        return SUBSCRIPT_BASE + int(name[1:])
    raise ValueError(f"not a letter name: {name!r}")


def subscripted(i: int) -> Letter:
    """The letter displayed as ``x<i>``."""
    return SUBSCRIPT_BASE + i


@dataclass(frozen=True, order=False)
class Word:
    letters: tuple[Letter, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("a word must contain at least one letter")
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))

    @classmethod
    def of(cls, *letters: Letter) -> "Word":
        return cls(tuple(letters))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``xyx``, ``x^2y``, ``x1x2x3`` and so on."""
        letters: list[Letter] = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse word {text!r} at column {pos + 1}")
            name = m.group(1) or m.group(2)
            k = int(m.group(3)) if m.group(3) else 1
            if k < 1:
                raise ValueError(f"exponent must be positive in {text!r}")
            letters.extend([letter(name)] * k)
            pos = m.end()
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __pow__(self, k: int) -> "Word":
        if k < 1:
            raise ValueError("semigroup powers start at 1")
        return Word(self.letters * k)

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "".join(letter_name(a) for a in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def as_word(w) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w)
    return Word(tuple(w))


def concat(a: Word, b: Word) -> Word:
    return Word(a.letters + b.letters)


def content(a: Word) -> frozenset[Letter]:
    return frozenset(a.letters)


def length(a: Word) -> int:
    return len(a.letters)


def is_linear(a: Word) -> bool:
    return len(set(a.letters)) == len(a.letters)


def similar(a: Word, b: Word) -> Optional[dict[Letter, Letter]]:
    """The renaming taking ``a`` to ``b``, or ``None`` if there is none."""
    if len(a) != len(b):
        return None
    fwd: dict[Letter, Letter] = {}
    back: dict[Letter, Letter] = {}
    for p, q in zip(a.letters, b.letters):
        if fwd.setdefault(p, q) != q or back.setdefault(q, p) != p:
            return None
    return fwd


def apply_permutation(pi: Renaming, a: Word) -> Word:
    try:
        return Word(tuple(pi[x] for x in a.letters))
    except KeyError as exc:
        raise DomainError(f"letter {letter_name(exc.args[0])} of {a} not in domain") from None


def compose(first: Renaming, then: Renaming) -> dict[Letter, Letter]:
    """Left-to-right composition: apply ``first``, then ``then``.

    ``apply_permutation(compose(t, s), w) == apply_permutation(s, apply_permutation(t, w))``
    """
    return {x: then.get(y, y) for x, y in first.items()}


def substitute(a: Word, theta: Mapping[Letter, Word]) -> Word:
    out: list[Letter] = []
    for x in a.letters:
        if x not in theta:
            raise DomainError(f"letter {letter_name(x)} of {a} not in substitution domain")
        out.extend(as_word(theta[x]).letters)
    return Word(tuple(out))


def canonical_renaming(letters: Iterable[Letter]) -> dict[Letter, Letter]:
    ren: dict[Letter, Letter] = {}
    for x in letters:
        if x not in ren:
            ren[x] = len(ren)
    return ren


def canonical_form(a: Word) -> Word:
    ren = canonical_renaming(a.letters)
    return Word(tuple(ren[x] for x in a.letters))


def enumerate_words(m: int, B: int) -> list[Word]:
    """All words over letters ``0..m-1`` of length at most ``B`` in shortlex order."""
    if m < 1 or B < 1:
        raise ValueError("need m >= 1 and B >= 1")
    return [Word(t) for t in iter_tuples(m, B)]


def iter_tuples(m: int, B: int, start: int = 1) -> Iterator[tuple[int, ...]]:
    for n in range(start, B + 1):
        yield from itertools.product(range(m), repeat=n)


def canonical_words(max_len: int, min_len: int = 1) -> Iterator[Word]:
    """Canonical words (letters numbered by first occurrence) in shortlex order."""
    for n in range(min_len, max_len + 1):
        yield from (Word(t) for t in _canonical_tuples(n))


def _canonical_tuples(n: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix: list[int], k: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for a in range(k + 1):
            prefix.append(a)
            yield from rec(prefix, max(k, a + 1))
            prefix.pop()

    yield from rec([], 0)

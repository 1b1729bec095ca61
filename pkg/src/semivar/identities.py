"""Semigroup identities, the ``u = 0`` shorthand, and the ``.ids`` text format.

Grammar of an ``.ids`` file::

    system    := statement*
    statement := WORD '=' (WORD | '0') ';'
    WORD      := (LETTER ('^' DIGITS)?)+
    LETTER    := 'a'..'z' | 'x' DIGITS

Whitespace is insignificant and ``#`` starts a comment running to end of line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .words import (
    Letter,
    Word,
    as_word,
    canonical_renaming,
    content,
    letter,
    subscripted,
)


@dataclass(frozen=True)
class Plain:
    lhs: Word
    rhs: Word

    @property
    def trivial(self) -> bool:
        return self.lhs == self.rhs

    def letters(self) -> frozenset[Letter]:
        return content(self.lhs) | content(self.rhs)

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class Zero:
    """``u = 0``: shorthand for ``zu = u`` and ``uz = u`` with ``z`` fresh."""

    u: Word

    trivial = False

    def letters(self) -> frozenset[Letter]:
        return content(self.u)

    def __str__(self) -> str:
        return f"{self.u} = 0"


Identity = Union[Plain, Zero]


def plain(lhs, rhs) -> Plain:
    return Plain(as_word(lhs), as_word(rhs))


def zero(u) -> Zero:
    return Zero(as_word(u))


def fresh_letter(used: Iterable[Letter]) -> Letter:
    used = set(used)
    a = 0
    while a in used:
        a += 1
    return a


def expand_zero(ident: Identity) -> list[Plain]:
    if isinstance(ident, Plain):
        return [ident]
    z = Word.of(fresh_letter(content(ident.u)))
    return [Plain(z * ident.u, ident.u), Plain(ident.u * z, ident.u)]


def holds_in_SL(ident: Identity) -> bool:
    if isinstance(ident, Zero):
        return False
    return content(ident.lhs) == content(ident.rhs)


def make_permutational(n: int, pi) -> Plain:
    """``x1 x2 ... xn = x(1pi) x(2pi) ... x(npi)``.

    ``pi`` is anything with an ``images`` sequence (1-based images), or the
    sequence itself.
    """
    if n < 2:
        raise ValueError("permutational identities have length at least 2")
    images = tuple(getattr(pi, "images", pi))
    if sorted(images) != list(range(1, n + 1)):
        raise ValueError(f"{images} is not a permutation of 1..{n}")
    lhs = Word(tuple(subscripted(i) for i in range(1, n + 1)))
    rhs = Word(tuple(subscripted(images[i - 1]) for i in range(1, n + 1)))
    return Plain(lhs, rhs)


def canonical_identity(ident: Identity) -> Identity:
    """Rename letters by first occurrence across both sides."""
    if isinstance(ident, Zero):
        ren = canonical_renaming(ident.u.letters)
        return Zero(Word(tuple(ren[a] for a in ident.u)))
    ren = canonical_renaming(ident.lhs.letters + ident.rhs.letters)
    return Plain(
        Word(tuple(ren[a] for a in ident.lhs)),
        Word(tuple(ren[a] for a in ident.rhs)),
    )


def _identity_key(ident: Identity):
    c = canonical_identity(ident)
    if isinstance(c, Zero):
        return ("0", c.u.letters)
    # u = v and v = u are the same identity
    flipped = canonical_identity(Plain(ident.rhs, ident.lhs))
    return ("=",) + min((c.lhs.letters, c.rhs.letters), (flipped.lhs.letters, flipped.rhs.letters))


@dataclass(frozen=True)
class IdentitySystem:
    identities: tuple[Identity, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "identities", tuple(self.identities))

    def __iter__(self) -> Iterator[Identity]:
        return iter(self.identities)

    def __len__(self) -> int:
        return len(self.identities)

    def __add__(self, other: "IdentitySystem") -> "IdentitySystem":
        return IdentitySystem(self.identities + tuple(other.identities))

    def key(self) -> frozenset:
        """Set of identities up to renaming and side order; used for equality and caching."""
        return frozenset(_identity_key(i) for i in self.identities)

    def same_identities(self, other: "IdentitySystem") -> bool:
        return self.key() == other.key()

    @property
    def zero_identities(self) -> list[Zero]:
        return [i for i in self.identities if isinstance(i, Zero)]

    def max_side_length(self) -> int:
        best = 0
        for i in self.identities:
            if isinstance(i, Zero):
                best = max(best, len(i.u))
            else:
                best = max(best, len(i.lhs), len(i.rhs))
        return best

    def __str__(self) -> str:
        return format_system(self)


def system(*identities: Identity) -> IdentitySystem:
    return IdentitySystem(tuple(identities))


class IdsSyntaxError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


_LEX = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<var>x\d+|[a-z])|(?P<pow>\^\s*\d+)|(?P<zero>0)"
    r"|(?P<eq>=)|(?P<semi>;)"
)


def _tokens(text: str):
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _LEX.match(text, pos)
        col = pos - line_start + 1
        if not m:
            raise IdsSyntaxError(f"unknown symbol {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            yield kind, m.group(), line, col
        pos = m.end()
    yield "eof", "", line, pos - line_start + 1


def parse_identity(text: str) -> Identity:
    """Parse a single identity; the trailing ``;`` is optional."""
    text = text.strip()
    if not text.endswith(";"):
        text += ";"
    sys_ = parse_system(text)
    if len(sys_) != 1:
        raise IdsSyntaxError("expected exactly one identity", 1, 1)
    return sys_.identities[0]


def parse_system(text: str) -> IdentitySystem:
    toks = list(_tokens(text))
    i = 0
    out: list[Identity] = []

    def word() -> Word:
        nonlocal i
        letters: list[Letter] = []
        while toks[i][0] == "var":
            a = letter(toks[i][1])
            i += 1
            k = 1
            if toks[i][0] == "pow":
                k = int(toks[i][1][1:].strip())
                if k < 1:
                    raise IdsSyntaxError("exponent must be positive", toks[i][2], toks[i][3])
                i += 1
            letters.extend([a] * k)
        if not letters:
            kind, val, ln, col = toks[i]
            raise IdsSyntaxError(f"expected a word, got {val or kind!r}", ln, col)
        return Word(tuple(letters))

    def expect(kind: str):
        nonlocal i
        k, val, ln, col = toks[i]
        if k != kind:
            raise IdsSyntaxError(f"expected {kind!r}, got {val or k!r}", ln, col)
        i += 1

    while toks[i][0] != "eof":
        lhs = word()
        expect("eq")
        if toks[i][0] == "zero":
            i += 1
            out.append(Zero(lhs))
        else:
            out.append(Plain(lhs, word()))
        expect("semi")
    return IdentitySystem(tuple(out))


def format_identity(ident: Identity) -> str:
    return f"{ident};"


def format_system(sys_: IdentitySystem) -> str:
    return "\n".join(format_identity(i) for i in sys_.identities) + ("\n" if len(sys_) else "")


def identities_of(items: Union[IdentitySystem, Sequence[Identity], str]) -> IdentitySystem:
    if isinstance(items, IdentitySystem):
        return items
    if isinstance(items, str):
        return parse_system(items)
    return IdentitySystem(tuple(items))

"""Word classes Z, L, S1, S2 relative to a flat-nil variety, and recognition of the classification systems."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..identities import Identity
from ..words import Word, as_word, canonical_words, content, is_linear, similar
from .catalog import theorem1_system
from .descriptors import FlatNil, SLJoin, Trivial

TAGS = ("Z", "L", "S1", "S2")

# shapes of the non-zero non-linear words for each classification system
S_SHAPES: dict[int, tuple[str, ...]] = {
    2: ("xx", "xyx"),
    3: ("xx",),
    4: ("xx", "xxy"),
    5: ("xx", "xyy"),
}


@dataclass(frozen=True)
class WordClass:
    tag: str

    def __post_init__(self):
        if self.tag not in TAGS and not (self.tag.startswith("S") and self.tag[1:].isdigit()):
            raise ValueError(f"unknown word class {self.tag!r}")

    @property
    def is_s(self) -> bool:
        return self.tag.startswith("S")

    def __str__(self) -> str:
        return self.tag


def classify_word(N: FlatNil, w) -> WordClass:
    """``Z`` if ``w = 0`` holds, else ``L`` for linear words, else ``S<k>`` with k letters.

    Only ``S1`` and ``S2`` occur for the classification systems; other bases may
    produce ``S3`` and beyond.
    """
    w = as_word(w)
    if N.summary.is_zero(w):
        return WordClass("Z")
    if is_linear(w):
        return WordClass("L")
    return WordClass(f"S{len(content(w))}")


def s_words(N: FlatNil, max_len: int = 5) -> list[Word]:
    return [w for w in canonical_words(max_len) if classify_word(N, w).is_s]


def matches_shapes(N: FlatNil, shapes, max_len: int = 5) -> bool:
    """Every S-word up to ``max_len`` is similar to a listed shape, and every shape is an S-word."""
    shape_words = [as_word(s) for s in shapes]
    found = s_words(N, max_len)
    if any(not any(similar(w, s) is not None for s in shape_words) for w in found):
        return False
    return all(classify_word(N, s).is_s for s in shape_words)


@dataclass(frozen=True)
class Decomposition:
    M: str
    system: int

    def __str__(self) -> str:
        return f"{self.M} v N, N satisfies system ({self.system})"


def _nil_part(V):
    if isinstance(V, SLJoin):
        return "SL", V.nil
    if isinstance(V, (FlatNil, Trivial)):
        return "T", V
    raise TypeError("recognition needs a flat-nil variety or its join with SL")


def entails(V, ident: Identity) -> bool:
    return V.holds(ident)


def theorem1_recognize(V) -> Optional[Decomposition]:
    """The first of systems (2)-(5) entailed by the nil part of ``V``, if any."""
    M, N = _nil_part(V)
    for i in (2, 3, 4, 5):
        if all(entails(N, ident) for ident in theorem1_system(i)):
            return Decomposition(M, i)
    return None

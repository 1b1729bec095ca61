"""Variety descriptors: the trivial variety, SL, flat-nil varieties and their joins.

Every descriptor exposes ``key(w)`` with ``u = v`` holding iff
``key(u) == key(v)``, ``holds(identity)`` and a ``horizon``: a word length from
which on the key depends only on content and linearity.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

from ..engine.congruence import ResourceError
from ..engine.decide import Budget
from ..engine.summary import ZERO, TheorySummary, _sorted_renaming, theory_summary
from ..identities import Identity, IdentitySystem, Plain, Zero, expand_zero, holds_in_SL
from ..words import Word, as_word, content


class TotalityError(ValueError):
    """The basis does not yield a total summary within the bound schedule."""


class UndecidableDescriptor(TypeError):
    pass


def _letters(w) -> tuple[int, ...]:
    return tuple(w.letters) if isinstance(w, Word) else tuple(w)


def _holds_by_key(V, ident: Identity) -> bool:
    if isinstance(ident, Zero):
        return all(V.key(p.lhs) == V.key(p.rhs) for p in expand_zero(ident))
    return V.key(ident.lhs) == V.key(ident.rhs)


@dataclass(frozen=True)
class Trivial:
    horizon = 1
    is_nil = True

    def key(self, w) -> object:
        return ()

    def holds(self, ident: Identity) -> bool:
        return True

    def __str__(self) -> str:
        return "T"


@dataclass(frozen=True)
class SL:
    horizon = 2
    is_nil = False

    def key(self, w) -> object:
        return frozenset(_letters(w))

    def holds(self, ident: Identity) -> bool:
        return holds_in_SL(ident)

    def __str__(self) -> str:
        return "SL"


@dataclass(frozen=True, eq=False)
class FlatNil:
    basis: IdentitySystem
    summary: TheorySummary
    name: str = ""

    is_nil = True

    def __post_init__(self):
        if not self.summary.total:
            raise TotalityError(f"summary of {self.basis} is not total")

    @classmethod
    def of(cls, basis, name: str = "", budget: Budget = Budget()) -> "FlatNil":
        from ..identities import identities_of

        basis = identities_of(basis)
        return cls(basis, theory_summary(basis, ceiling=budget.ceiling), name)

    def __eq__(self, other) -> bool:
        return isinstance(other, FlatNil) and self.basis.key() == other.basis.key()

    def __hash__(self) -> int:
        return hash(self.basis.key())

    @property
    def horizon(self) -> int:
        return self.summary.bound

    def key(self, w) -> object:
        return self.summary.key(_letters(w))

    def holds(self, ident: Identity) -> bool:
        return self.summary.holds(ident)

    def __str__(self) -> str:
        return self.name or f"var{{{self.basis}}}"


@dataclass(frozen=True)
class SLJoin:
    """``SL`` joined with a nil variety: identities of both."""

    nil: "Nil"
    is_nil = False

    @property
    def horizon(self) -> int:
        return max(2, self.nil.horizon)

    def key(self, w) -> object:
        return (frozenset(_letters(w)), self.nil.key(w))

    def holds(self, ident: Identity) -> bool:
        return holds_in_SL(ident) and self.nil.holds(ident)

    def __str__(self) -> str:
        return f"SL v {self.nil}"


@dataclass(frozen=True)
class JoinOracle:
    """Join of arbitrary descriptors, kept as the intersection of their theories."""

    parts: tuple

    @property
    def horizon(self) -> int:
        return max(p.horizon for p in self.parts)

    @property
    def is_nil(self) -> bool:
        return all(getattr(p, "is_nil", False) for p in self.parts)

    def key(self, w) -> object:
        return tuple(p.key(w) for p in self.parts)

    def holds(self, ident: Identity) -> bool:
        return all(p.holds(ident) for p in self.parts)

    def __str__(self) -> str:
        return " v ".join(f"({p})" for p in self.parts)


Nil = Union[Trivial, FlatNil]
Descriptor = Union[Trivial, SL, FlatNil, SLJoin, JoinOracle]


def holds_in(V, ident: Identity) -> bool:
    if not hasattr(V, "holds"):
        raise UndecidableDescriptor(f"{V!r} cannot decide identities")
    return V.holds(ident)


def join_theory(V1, V2) -> JoinOracle:
    return JoinOracle((V1, V2))


# --- meets and normalised joins -------------------------------------------

def meet(V1, V2, budget: Budget = Budget()):
    """Meet of two descriptors.

    Flat-nil meets re-summarise the union of the bases.  The remaining cases
    use that nil varieties meet SL trivially and that SL is neutral, so
    ``(SL v N1) ^ (SL v N2) = SL v (N1 ^ N2)`` and ``N1 ^ (SL v N2) = N1 ^ N2``.
    """
    if isinstance(V1, Trivial) or isinstance(V2, Trivial):
        return Trivial()
    if isinstance(V1, FlatNil) and isinstance(V2, FlatNil):
        return _nil_meet(V1, V2, budget)
    if isinstance(V1, SL) and isinstance(V2, SL):
        return V1
    if isinstance(V1, SL):
        return V1 if isinstance(V2, SLJoin) else Trivial()
    if isinstance(V2, SL):
        return meet(V2, V1, budget)
    if isinstance(V1, SLJoin) and isinstance(V2, SLJoin):
        return sl_join(meet(V1.nil, V2.nil, budget))
    if isinstance(V1, SLJoin):
        return meet(V1.nil, V2, budget)
    if isinstance(V2, SLJoin):
        return meet(V1, V2.nil, budget)
    raise UndecidableDescriptor(f"no meet rule for {type(V1).__name__} and {type(V2).__name__}")


_MEETS: dict = {}
_JOINS: dict = {}


def _pair_key(V1: FlatNil, V2: FlatNil, budget: Budget):
    return (frozenset((V1.basis.key(), V2.basis.key())), budget)


def _nil_meet(V1: FlatNil, V2: FlatNil, budget: Budget) -> FlatNil:
    k = _pair_key(V1, V2, budget)
    if k not in _MEETS:
        _MEETS[k] = _compute_nil_meet(V1, V2, budget)
    hit = _MEETS[k]
    return FlatNil(hit.basis, hit.summary, f"({V1} ^ {V2})")


def _compute_nil_meet(V1: FlatNil, V2: FlatNil, budget: Budget) -> FlatNil:
    basis = V1.basis + V2.basis
    summary = theory_summary(basis, ceiling=budget.ceiling)
    if not summary.total:
        raise TotalityError(f"meet basis {basis} is not total within the bound schedule")
    return FlatNil(basis, summary, f"({V1} ^ {V2})")


def sl_join(N):
    return SL() if isinstance(N, Trivial) else SLJoin(N)


def join(V1, V2, budget: Budget = Budget()):
    """Join as a descriptor of the same kinds; flat-nil joins get a derived basis.

    When saturating the derived basis exceeds the resource caps the join is
    returned as a :class:`JoinOracle`, which decides identities but has no meet.
    """
    if isinstance(V1, Trivial):
        return V2
    if isinstance(V2, Trivial):
        return V1
    if isinstance(V1, FlatNil) and isinstance(V2, FlatNil):
        try:
            return nil_join(V1, V2, budget)
        except ResourceError:
            # no affordable basis: keep the exact join as an oracle
            return JoinOracle((V1, V2))
    if isinstance(V1, SL) and isinstance(V2, SL):
        return V1
    if isinstance(V1, SL):
        return V2 if isinstance(V2, SLJoin) else SLJoin(V2)
    if isinstance(V2, SL):
        return join(V2, V1, budget)
    n1 = V1.nil if isinstance(V1, SLJoin) else V1
    n2 = V2.nil if isinstance(V2, SLJoin) else V2
    if isinstance(n1, (FlatNil, Trivial)) and isinstance(n2, (FlatNil, Trivial)):
        return sl_join(join(n1, n2, budget))
    raise UndecidableDescriptor(f"no join rule for {type(V1).__name__} and {type(V2).__name__}")


def standard_words(max_len: int):
    """Words over ``0..k-1`` using every one of those letters, ``k <= max_len``."""
    for n in range(1, max_len + 1):
        for t in itertools.product(range(n), repeat=n):
            if set(t) == set(range(max(t) + 1)):
                yield t


def _is_zero_key(k) -> bool:
    return k == ZERO or (isinstance(k, tuple) and bool(k) and all(x == ZERO for x in k))


def basis_from_partition(V, bound: int) -> IdentitySystem:
    """Identities ``u = rep`` and ``u = 0`` read off the key partition up to ``bound``.

    ``rep`` is the shortlex-least word of a class.  Only minimal rules are kept:
    a word contributes when every proper factor is its own representative,
    which is enough to rewrite any word of length ``<= bound`` to its
    representative.  Words of length ``bound`` force the tail.
    """
    idents: list[Identity] = []
    reps: dict = {}
    irreducible: set = set()

    def factors_irreducible(t) -> bool:
        n = len(t)
        for i in range(n):
            for j in range(i + 1, n + 1):
                if j - i < n and _sorted_renaming(t[i:j]) not in irreducible:
                    return False
        return True

    for t in standard_words(bound):
        k = V.key(t)
        if _is_zero_key(k):
            if factors_irreducible(t):
                idents.append(Zero(Word(t)))
        elif k in reps:
            if factors_irreducible(t):
                idents.append(Plain(Word(t), reps[k]))
        else:
            reps[k] = Word(t)
            irreducible.add(t)
    return IdentitySystem(tuple(idents))


def nil_join(V1: FlatNil, V2: FlatNil, budget: Budget = Budget()) -> FlatNil:
    k = _pair_key(V1, V2, budget)
    if k not in _JOINS:
        _JOINS[k] = _compute_nil_join(V1, V2, budget)
    hit = _JOINS[k]
    return FlatNil(hit.basis, hit.summary, f"({V1} v {V2})")


def _compute_nil_join(V1: FlatNil, V2: FlatNil, budget: Budget) -> FlatNil:
    oracle = JoinOracle((V1, V2))
    bound = oracle.horizon
    basis = basis_from_partition(oracle, bound)
    out = FlatNil(basis, theory_summary(basis, ceiling=budget.ceiling), f"({V1} v {V2})")
    if not theory_equal(out, oracle):
        raise TotalityError("derived join basis does not reproduce the join theory")
    return out


# --- theory comparison ----------------------------------------------------

def _identity(V):
    """Hashable identity of a descriptor's theory source, or None."""
    if isinstance(V, FlatNil):
        return ("nil", V.basis.key())
    if isinstance(V, SLJoin):
        inner = _identity(V.nil)
        return None if inner is None else ("SL+", inner)
    if isinstance(V, (Trivial, SL)):
        return (type(V).__name__,)
    return None


_PARTITIONS: dict = {}


def _partition(V, N: int) -> frozenset:
    ident = _identity(V)
    if ident is None:
        return _compute_partition(V, N)
    if (ident, N) not in _PARTITIONS:
        _PARTITIONS[ident, N] = _compute_partition(V, N)
    return _PARTITIONS[ident, N]


def _compute_partition(V, N: int) -> frozenset:
    classes: dict = {}
    for n in range(1, N + 1):
        for t in itertools.product(range(N), repeat=n):
            classes.setdefault(V.key(t), []).append(t)
    return frozenset(frozenset(c) for c in classes.values())


def comparison_length(*Vs) -> int:
    for V in Vs:
        if not hasattr(V, "key"):
            raise UndecidableDescriptor(f"{V!r} has no class key")
    return max(2, max(V.horizon for V in Vs) + 1)


def theory_equal(V1, V2) -> bool:
    """Equal theories, compared on every word over ``N`` letters of length ``<= N``.

    ``N`` is one past the larger horizon; beyond a horizon a word's class is
    fixed by its content and linearity, and the zero identities ``u = 0`` are
    seen through ``xu = u`` one letter longer.
    """
    N = comparison_length(V1, V2)
    return _partition(V1, N) == _partition(V2, N)


def fingerprint(V, N: int) -> tuple:
    """Canonical serialisation of the theory restricted to length ``N``."""
    part = _partition(V, N)
    return tuple(sorted(tuple(sorted(c)) for c in part))

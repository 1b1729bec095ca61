from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from ..identities import Identity, IdentitySystem, Plain, Zero, canonical_identity, expand_zero
from ..words import Word
from .congruence import Congruence, ResourceError, saturate
from .models import DEFAULT_MAX_ORDER, FiniteSemigroup, evaluate, find_countermodel
from .summary import DEFAULT_CEILING, ZERO, TheorySummary, theory_summary


@dataclass(frozen=True)
class Budget:
    max_order: int = DEFAULT_MAX_ORDER
    ceiling: int = DEFAULT_CEILING


@dataclass
class Holds:
    witness: Union[TheorySummary, Congruence]
    status = "Holds"

    def __str__(self) -> str:
        return "Holds"


@dataclass
class Fails:
    model: FiniteSemigroup
    assignment: Optional[dict] = None
    status = "Fails"

    def __str__(self) -> str:
        return f"Fails (order-{self.model.order} model)"


@dataclass
class Unknown:
    reason: str = ""
    status = "Unknown"

    def __str__(self) -> str:
        return "Unknown"


Outcome = Union[Holds, Fails, Unknown]


def relatively_free_model(summary: TheorySummary, letters: list[int]) -> tuple[FiniteSemigroup, dict]:
    """The relatively free semigroup of a total summary on ``len(letters)`` generators.

    Returns the semigroup and the assignment sending each letter to its generator.
    """
    if not summary.total:
        raise ValueError("relatively free model needs a total summary")
    k = len(letters)
    top = summary.bound - 1 if summary.tail == "zero" else max(summary.bound - 1, k)
    keys: dict = {ZERO: 0}
    reps: list[Optional[tuple]] = [None]
    for n in range(1, top + 1):
        for t in itertools.product(range(k), repeat=n):
            key = summary.key(t)
            if key not in keys:
                keys[key] = len(reps)
                reps.append(t)
    size = len(reps)
    table = np.zeros((size, size), dtype=np.int64)
    for i in range(1, size):
        for j in range(1, size):
            table[i, j] = keys[summary.key(reps[i] + reps[j])]
    S = FiniteSemigroup(table, f"relatively free semigroup on {k} generators")
    env = {a: keys[summary.key((i,))] for i, a in enumerate(letters)}
    return S, env


def _partial_holds(sigma: IdentitySystem, ident: Identity, summary: TheorySummary
                   ) -> Optional[Congruence]:
    """Saturation witness that ``ident`` is derivable, or None."""
    cong = summary.congruence
    if isinstance(ident, Zero) and summary.has_zero:
        c = canonical_identity(ident)
        if len(set(c.u)) <= cong.m and len(c.u) <= cong.B and cong.is_zero(c.u):
            return cong
    for p in expand_zero(ident):
        c = canonical_identity(p)
        k = len(set(c.lhs.letters) | set(c.rhs.letters))
        need_B = max(len(c.lhs), len(c.rhs))
        if not (k <= cong.m and need_B <= cong.B):
            try:
                cong = saturate(sigma, k, need_B + 1)
            except ResourceError:
                return None
        if not cong.same(c.lhs, c.rhs):
            return None
    return cong


def decide(sigma: IdentitySystem, ident: Identity, budget: Budget = Budget()) -> Outcome:
    if ident.trivial:
        return Holds(theory_summary(sigma, ceiling=budget.ceiling))
    summary = theory_summary(sigma, ceiling=budget.ceiling)
    if summary.total:
        if summary.holds(ident):
            return Holds(summary)
        model = find_countermodel(sigma, ident, budget.max_order)
        if model is not None:
            return Fails(model)
        failing = next(p for p in expand_zero(ident) if not summary.holds(p))
        S, env = relatively_free_model(summary, sorted(failing.letters()))
        assert evaluate(S, failing.lhs, env) != evaluate(S, failing.rhs, env)
        return Fails(S, env)
    witness = _partial_holds(sigma, ident, summary)
    if witness is not None:
        return Holds(witness)
    model = find_countermodel(sigma, ident, budget.max_order)
    if model is not None:
        return Fails(model)
    return Unknown(f"no derivation within bound {summary.congruence.B} "
                   f"and no countermodel of order <= {budget.max_order}")

"""End-to-end verification reports: modular non-cancellable triples and the classification systems."""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import Optional

from ..engine.decide import Budget
from ..identities import make_permutational
from ..permgroups import Permutation, generated, perm_n, symmetric, trivial
from .catalog import PROP2_CORE, commutative_nil, prop2_basis, theorem1_system
from .classify import S_SHAPES, matches_shapes, theorem1_recognize
from .descriptors import (
    SL, FlatNil, SLJoin, Trivial, comparison_length, fingerprint, join, join_theory, meet,
    theory_equal,
)
from .family import FiniteFamily, cancellation_witnesses, is_modular_in


class PreconditionError(ValueError):
    pass


def _perm3(p) -> Permutation:
    return p if isinstance(p, Permutation) else Permutation.parse(p, 3)


def _check_triple(rho: Permutation, sigma: Permutation, tau: Permutation):
    gens = [rho, sigma, tau]
    if any(p.n != 3 for p in gens):
        raise PreconditionError("permutations must have degree 3")
    if any(p.is_identity for p in gens):
        raise PreconditionError("permutations must be non-trivial")
    groups = [generated(3, [p]) for p in gens]
    if len(set(groups)) != 3:
        raise PreconditionError("gr{rho}, gr{sigma}, gr{tau} must be pairwise distinct")


def admissible_triples() -> list[tuple[Permutation, ...]]:
    """Ordered triples of generators of distinct non-trivial proper subgroups of S_3."""
    reps = [Permutation.parse(c, 3) for c in ("(12)", "(13)", "(23)", "(123)")]
    return list(itertools.permutations(reps, 3))


def prop2_variety(rho, name: str = "") -> FlatNil:
    rho = _perm3(rho)
    return FlatNil.of(prop2_basis(rho), name or f"N[{rho}]")


@dataclass
class Prop2Report:
    rho: str
    sigma: str
    tau: str
    perm3_V: str
    perm3_X: str
    perm3_Y: str
    perm3_meet: str
    perm3_join: str
    meet_equal: bool
    join_equal: bool
    X_neq_Y: bool
    perms_ok: bool
    comparison_length: int
    overall: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def __str__(self) -> str:
        mark = lambda ok: "PASS" if ok else "FAIL"
        return "\n".join([
            f"rho={self.rho} sigma={self.sigma} tau={self.tau}",
            f"  Perm_3(V)={self.perm3_V} Perm_3(X)={self.perm3_X} Perm_3(Y)={self.perm3_Y}",
            f"  Perm_3(V ^ X)={self.perm3_meet} Perm_3(V v X)={self.perm3_join}",
            f"  V ^ X = V ^ Y: {mark(self.meet_equal)}",
            f"  V v X = V v Y: {mark(self.join_equal)}",
            f"  X != Y: {mark(self.X_neq_Y)}",
            f"  compared words up to length {self.comparison_length}",
            f"  overall: {mark(self.overall)}",
        ])


def verify_prop2(rho, sigma, tau, budget: Budget = Budget()) -> Prop2Report:
    rho, sigma, tau = _perm3(rho), _perm3(sigma), _perm3(tau)
    _check_triple(rho, sigma, tau)
    V, X, Y = (prop2_variety(p, nm) for p, nm in ((rho, "V"), (sigma, "X"), (tau, "Y")))
    VX, VY = meet(V, X, budget), meet(V, Y, budget)
    JX, JY = join_theory(V, X), join_theory(V, Y)
    pV, pX, pY = (perm_n(W, 3).lower for W in (V, X, Y))
    p_meet, p_join = perm_n(VX, 3).lower, perm_n(JX, 3).lower
    perms_ok = (pV == generated(3, [rho]) and pX == generated(3, [sigma]) and pY == generated(3, [tau])
                and p_meet == symmetric(3) and p_join == trivial(3)
                and perm_n(VY, 3).lower == symmetric(3) and perm_n(JY, 3).lower == trivial(3))
    meet_equal = theory_equal(VX, VY)
    join_equal = theory_equal(JX, JY)
    x_neq_y = not theory_equal(X, Y)
    return Prop2Report(
        rho=str(rho), sigma=str(sigma), tau=str(tau),
        perm3_V=pV.name(), perm3_X=pX.name(), perm3_Y=pY.name(),
        perm3_meet=p_meet.name(), perm3_join=p_join.name(),
        meet_equal=meet_equal, join_equal=join_equal, X_neq_Y=x_neq_y, perms_ok=perms_ok,
        comparison_length=comparison_length(JX, JY),
        overall=meet_equal and join_equal and x_neq_y and perms_ok,
    )


# --- closed families -------------------------------------------------------

def _label(V) -> str:
    return str(V)


def variety_family(seeds, budget: Budget = Budget(), cap: int = 64) -> FiniteFamily:
    N = comparison_length(*seeds)
    return FiniteFamily.close(
        seeds,
        join=lambda a, b: join(a, b, budget),
        meet=lambda a, b: meet(a, b, budget),
        fingerprint=lambda V: fingerprint(V, N),
        cap=cap,
        label=_label,
    )


def prop2_family(rho, sigma, tau, budget: Budget = Budget()) -> tuple[FiniteFamily, dict]:
    """Family closed from T, SL, V, X, Y and the joins of V, X, Y with SL."""
    V, X, Y = prop2_variety(rho, "V"), prop2_variety(sigma, "X"), prop2_variety(tau, "Y")
    seeds = [Trivial(), SL(), V, X, Y, SLJoin(V), SLJoin(X), SLJoin(Y)]
    F = variety_family(seeds, budget)
    named = {"T": seeds[0], "SL": seeds[1], "V": V, "X": X, "Y": Y}
    return F, {k: F.index(v) for k, v in named.items()}


def standard_family(N: FlatNil, budget: Budget = Budget()) -> FiniteFamily:
    """Family closed from T, SL, N, SL v N, the commutative nil variety C and
    K = var{xyzt = xyx = xx = 0}."""
    k = (N.basis.key(), budget)
    if k not in _STANDARD:
        C = FlatNil.of(commutative_nil(), "C")
        K = FlatNil.of(PROP2_CORE, "K")
        _STANDARD[k] = variety_family([Trivial(), SL(), N, SLJoin(N), C, SLJoin(C), K, SLJoin(K)], budget)
    return _STANDARD[k]


_STANDARD: dict = {}


# --- classification systems ----------------------------------------------

@dataclass
class Theorem1Case:
    system: int
    M: str
    total: bool
    effective_bound: Optional[int]
    shapes_ok: bool
    perm4: str
    perm4_full: bool
    recognized: Optional[str]
    modular: bool
    family_size: int
    passed: bool

    def __str__(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return (f"system ({self.system}) with M={self.M}: total={self.total} B_eff={self.effective_bound} "
                f"S-shapes={'ok' if self.shapes_ok else 'MISMATCH'} Perm_4={self.perm4} "
                f"recognized=({self.recognized}) modular in family of {self.family_size}: "
                f"{self.modular} -> {mark}")


@dataclass
class Theorem1Report:
    cases: list[Theorem1Case] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return bool(self.cases) and all(c.passed for c in self.cases)

    def to_dict(self) -> dict:
        return {"cases": [asdict(c) for c in self.cases], "overall": self.overall}

    def __str__(self) -> str:
        lines = [str(c) for c in self.cases]
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines)


def verify_theorem1_case(i: int, M: str, budget: Budget = Budget()) -> Theorem1Case:
    N = FlatNil.of(theorem1_system(i), f"N{i}", budget)
    V = SLJoin(N) if M == "SL" else N
    shapes_ok = matches_shapes(N, S_SHAPES[i])
    p4 = perm_n(V, 4).lower
    full = all(V.holds(make_permutational(4, p)) for p in symmetric(4).elements)
    rec = theorem1_recognize(V)
    rec_ok = rec is not None and rec.M == M and rec.system == i
    F = standard_family(N, budget)
    modular = is_modular_in(F, F.index(V)) is True
    passed = N.summary.total and shapes_ok and p4 == symmetric(4) and full and rec_ok and modular
    return Theorem1Case(i, M, N.summary.total, N.summary.bound, shapes_ok, p4.name(), full,
                        f"{rec.M}, ({rec.system})" if rec else None, modular, len(F), passed)


def verify_theorem1(budget: Budget = Budget()) -> Theorem1Report:
    return Theorem1Report([verify_theorem1_case(i, M, budget) for i in (2, 3, 4, 5) for M in ("T", "SL")])


def cancellable_witness_labels(F: FiniteFamily, x) -> list[tuple[str, str]]:
    return [(F.label(a), F.label(b)) for a, b in cancellation_witnesses(F, x)]

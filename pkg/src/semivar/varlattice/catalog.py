"""Named identity systems used throughout the package and its tests."""
from __future__ import annotations

from ..identities import IdentitySystem, make_permutational, parse_system

THEOREM1_TEXT = {
    2: "xyz = zyx; xxy = 0;",
    3: "xyz = yzx; xxy = 0;",
    4: "xyz = yxz; xyzt = xzty; xyy = 0;",
    5: "xyz = xzy; xyzt = yzxt; xxy = 0;",
}

PROP2_CORE = "xyzt = 0; xyx = 0; xx = 0;"

COMMUTATIVE_NIL = "xy = yx; xxy = 0;"

# nil bases containing some x1...xn = w with len(w) != n
LEMMA_LENGTH_BASES = {
    "xy=yxy": "xy = yxy; xxx = 0;",
    "xyz=xy": "xyz = xy; xx = 0;",
    "xy=x": "xy = x; xx = 0;",
    "xyz=xyzx": "xyz = xyzx; xx = 0;",
    "xy=xyx": "xy = xyx; xx = 0;",
    "xyz=xyzxy": "xyz = xyzxy; xyzt = 0;",
}

# extra flat-nil systems with varied permutation groups in degrees 3 and 4
EXTRA_NIL = {
    "nil3": "xyz = 0; xx = 0;",
    "core": PROP2_CORE,
    "p4-(12)": "xyzt = yxzt; xyztu = 0; xx = 0;",
    "p4-(34)": "xyzt = xytz; xyztu = 0; xx = 0;",
    "p4-(1234)": "xyzt = yztx; xyztu = 0; xx = 0;",
    "p4-(13)(24)": "xyzt = ztxy; xyztu = 0; xx = 0;",
}


def theorem1_system(i: int) -> IdentitySystem:
    if i not in THEOREM1_TEXT:
        raise KeyError(f"no system ({i}); choose from 2, 3, 4, 5")
    return parse_system(THEOREM1_TEXT[i])


def prop2_basis(rho) -> IdentitySystem:
    """``xyzt = 0, xyx = 0, x^2 = 0`` together with ``p_3[rho]``."""
    return parse_system(PROP2_CORE) + IdentitySystem((make_permutational(3, rho),))


def commutative_nil() -> IdentitySystem:
    return parse_system(COMMUTATIVE_NIL)


def lemma_length_bases() -> dict[str, IdentitySystem]:
    return {k: parse_system(v) for k, v in LEMMA_LENGTH_BASES.items()}


def flat_nil_catalog() -> dict[str, IdentitySystem]:
    """Every named nil system whose summary is total under the default schedule."""
    from ..permgroups import Permutation

    out = {f"sys{i}": theorem1_system(i) for i in THEOREM1_TEXT}
    for cyc in ("(12)", "(13)", "(23)", "(123)"):
        out[f"prop2{cyc}"] = prop2_basis(Permutation.parse(cyc, 3))
    out["comm"] = commutative_nil()
    out.update({k: parse_system(v) for k, v in EXTRA_NIL.items()})
    return out

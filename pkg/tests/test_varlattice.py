from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from semivar.engine import Holds, decide, theory_summary
from semivar.identities import Plain, Zero, parse_identity, parse_system
from semivar.permgroups import Permutation, generated, perm_n, symmetric, trivial
from semivar.varlattice import (
    SL, ClosureError, FiniteFamily, FlatNil, JoinOracle, PreconditionError, SLJoin, TotalityError,
    Trivial, UndecidableDescriptor, boolean_lattice, chain, classify_word, diamond, holds_in,
    is_cancellable_in, is_modular_in, is_neutral_in, join, join_theory, matches_shapes, meet,
    pentagon, prop2_family, theorem1_recognize, theory_equal, verify_prop2,
)
from semivar.varlattice.catalog import (
    commutative_nil, flat_nil_catalog, lemma_length_bases,
    prop2_basis, theorem1_system,
)
from semivar.varlattice.classify import S_SHAPES, s_words
from semivar.varlattice.reports import admissible_triples, standard_family, verify_theorem1_case
from semivar.words import Word, canonical_words, similar

W = Word.parse
P3 = lambda s: Permutation.parse(s, 3)


@pytest.fixture(scope="module")
def nils():
    return {k: FlatNil.of(v, k) for k, v in flat_nil_catalog().items()}


# --- descriptors ----------------------------------------------------------

def test_holds_in_examples(nils):
    assert holds_in(SL(), parse_identity("xy = yx"))
    assert holds_in(nils["sys2"], parse_identity("xxx = 0"))
    assert not holds_in(SLJoin(nils["sys2"]), parse_identity("xxy = 0"))
    assert holds_in(Trivial(), parse_identity("x = y"))


def test_flat_nil_requires_totality():
    with pytest.raises(TotalityError):
        FlatNil.of("xy = yx;")


def test_holds_in_rejects_non_descriptors():
    with pytest.raises(UndecidableDescriptor):
        holds_in(object(), parse_identity("x = x"))
    with pytest.raises(UndecidableDescriptor):
        theory_equal(object(), SL())


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(flat_nil_catalog())), st.sampled_from(sorted(flat_nil_catalog())),
       st.lists(st.integers(0, 2), min_size=1, max_size=5), st.lists(st.integers(0, 2), min_size=1, max_size=5))
def test_join_oracle_is_conjunction(a, b, u, v):
    cat = flat_nil_catalog()
    V1, V2 = FlatNil.of(cat[a]), FlatNil.of(cat[b])
    ident = Plain(Word(tuple(u)), Word(tuple(v)))
    assert join_theory(V1, V2).holds(ident) == (V1.holds(ident) and V2.holds(ident))


def test_meet_contains_both_theories(nils):
    for a, b in [("sys2", "prop2(12)"), ("prop2(12)", "prop2(13)"), ("comm", "sys4")]:
        M = meet(nils[a], nils[b])
        for ident in list(nils[a].basis) + list(nils[b].basis):
            assert M.holds(ident)
            assert isinstance(decide(M.basis, ident), Holds)


def test_meet_examples(nils):
    V, X = nils["prop2(12)"], nils["prop2(13)"]
    assert perm_n(meet(V, X), 3).lower == symmetric(3)
    J = join_theory(V, X)
    assert [p for p in symmetric(3).elements if J.holds(__import__("semivar").make_permutational(3, p))] \
        == [Permutation.identity(3)]
    assert theory_equal(meet(V, V), V)


def test_sl_rules(nils):
    N = nils["sys2"]
    assert isinstance(meet(SL(), N), Trivial)
    assert isinstance(meet(SL(), SLJoin(N)), SL)
    assert theory_equal(meet(SLJoin(N), SLJoin(nils["sys3"])), SLJoin(meet(N, nils["sys3"])))
    assert theory_equal(join(SL(), N), SLJoin(N))


def test_derived_join_basis_matches_oracle(nils):
    for a, b in [("sys2", "sys3"), ("prop2(12)", "prop2(123)"), ("comm", "nil3"), ("sys5", "core")]:
        J = join(nils[a], nils[b])
        assert isinstance(J, FlatNil)
        assert theory_equal(J, join_theory(nils[a], nils[b]))


def test_expensive_join_falls_back_to_oracle(nils):
    J = join(nils["sys4"], nils["p4-(12)"])
    assert theory_equal(J, join_theory(nils["sys4"], nils["p4-(12)"]))
    if isinstance(J, JoinOracle):
        with pytest.raises(UndecidableDescriptor):
            meet(J, nils["sys2"])


def test_theory_equal_examples(nils):
    V, X, Y = nils["prop2(12)"], nils["prop2(13)"], nils["prop2(123)"]
    assert theory_equal(meet(V, X), meet(V, Y))
    assert not theory_equal(X, Y)
    assert theory_equal(V, V)


def test_theory_equal_is_an_equivalence(nils):
    items = [nils[k] for k in ("sys2", "sys3", "comm", "nil3", "core")]
    items += [SL(), Trivial(), SLJoin(nils["sys2"]), meet(nils["sys2"], nils["sys3"])]
    for a in items:
        assert theory_equal(a, a)
        for b in items:
            assert theory_equal(a, b) == theory_equal(b, a)
            for c in items:
                if theory_equal(a, b) and theory_equal(b, c):
                    assert theory_equal(a, c)


# --- classification -------------------------------------------------------

@pytest.mark.parametrize("i,w,tag", [(2, "xxy", "Z"), (2, "xyx", "S2"), (3, "xx", "S1"), (4, "xyy", "Z"),
                                     (2, "xyz", "L"), (5, "xyy", "S2")])
def test_classify_examples(nils, i, w, tag):
    assert classify_word(nils[f"sys{i}"], W(w)).tag == tag


@pytest.mark.parametrize("i", [2, 3, 4, 5])
def test_classification_partition_and_shapes(nils, i):
    N = nils[f"sys{i}"]
    for w in canonical_words(5):
        tag = classify_word(N, w).tag
        assert tag in ("Z", "L", "S1", "S2")
    assert matches_shapes(N, S_SHAPES[i])
    s2 = [w for w in s_words(N) if classify_word(N, w).tag == "S2"]
    assert all(similar(u, v) is not None for u in s2 for v in s2)


def test_classify_beyond_two_letters():
    N = FlatNil.of("xyztu = 0; xx = 0;")
    assert classify_word(N, W("xyzx")).tag == "S3"
    assert classify_word(N, W("xyzxy")).tag == "Z"


def test_theorem1_recognize(nils):
    assert str(theorem1_recognize(SLJoin(nils["sys2"]))) == "SL v N, N satisfies system (2)"
    rec = theorem1_recognize(nils["prop2(13)"])
    assert (rec.M, rec.system) == ("T", 2)
    rec = theorem1_recognize(nils["comm"])
    assert rec is not None and rec.system == 2
    assert theorem1_recognize(nils["nil3"]).system == 2
    assert theorem1_recognize(FlatNil.of("xyx = 0; xx = 0; xyz = zyx;")).system == 2
    # xyz = zyx fails in the core variety
    assert theorem1_recognize(nils["core"]) is None


def test_theorem1_recognize_none():
    N = FlatNil.of("xyx = 0; xx = 0; xyzt = yxzt; xyztu = 0;")
    assert theorem1_recognize(N) is None


def test_lemma_length_bases_kill_linear_word():
    from semivar.identities import make_permutational
    for name, sigma in lemma_length_bases().items():
        n = max(len(i.lhs) for i in sigma if isinstance(i, Plain))
        x = make_permutational(n, tuple(range(1, n + 1))).lhs
        assert isinstance(decide(sigma, Zero(x)), Holds), name


# --- finite families ------------------------------------------------------

def test_pentagon_counterexample():
    N5 = pentagon()
    assert is_modular_in(N5, "b") == (N5.index("a"), N5.index("c"))
    assert not is_neutral_in(N5, "b")
    assert is_neutral_in(N5, "0")


def test_distributive_families():
    B = boolean_lattice(3)
    assert all(is_modular_in(B, x) is True and is_neutral_in(B, x) for x in range(len(B)))
    C = chain(5)
    assert all(is_cancellable_in(C, x) is True for x in range(len(C)))


def test_diamond_is_modular_not_cancellable():
    M3 = diamond()
    assert all(is_modular_in(M3, x) is True for x in range(5))
    assert is_cancellable_in(M3, "a") == (M3.index("b"), M3.index("c"))
    assert is_cancellable_in(M3, "0") is True


def test_inconsistent_tables_rejected():
    with pytest.raises(ClosureError):
        FiniteFamily.from_tables(["a", "b"], [[0, 0], [1, 1]], [[0, 0], [0, 1]])


def test_closure_cap():
    with pytest.raises(ClosureError):
        FiniteFamily.close(list(range(3)), join=lambda a, b: a + b + 1, meet=min,
                           fingerprint=lambda x: x, cap=10)


def test_prop2_family():
    F, ix = prop2_family("(12)", "(13)", "(123)")
    assert len(F) <= 64
    assert is_modular_in(F, ix["V"]) is True
    y, z = is_cancellable_in(F, ix["V"])
    assert {y, z} == {ix["X"], ix["Y"]}
    assert is_cancellable_in(F, ix["V"], among=[ix["X"], ix["Y"]]) in ((ix["X"], ix["Y"]), (ix["Y"], ix["X"]))
    assert is_neutral_in(F, ix["SL"])


def test_commutative_nil_modular_in_its_family():
    N = FlatNil.of(commutative_nil(), "C")
    F = standard_family(N)
    assert is_modular_in(F, F.index(N)) is True


# --- reports ---------------------------------------------------------------

def test_verify_prop2_example():
    r = verify_prop2("(12)", "(13)", "(123)")
    assert r.overall and r.meet_equal and r.join_equal and r.X_neq_Y
    assert (r.perm3_V, r.perm3_X, r.perm3_Y) == ("gr{(12)}", "gr{(13)}", "gr{(123)}")
    assert (r.perm3_meet, r.perm3_join) == ("S_3", "T")
    d = r.to_dict()
    for k in ("rho", "sigma", "tau", "perm3_V", "perm3_X", "perm3_Y", "meet_equal", "join_equal", "X_neq_Y",
              "overall"):
        assert k in d


@pytest.mark.parametrize("triple", [("(12)", "(12)", "(13)"), ("(123)", "(132)", "(12)"), ("()", "(12)", "(13)")])
def test_verify_prop2_preconditions(triple):
    with pytest.raises(PreconditionError):
        verify_prop2(*triple)


def test_admissible_triples():
    ts = admissible_triples()
    assert len(ts) == 24 and len(set(ts)) == 24


@pytest.mark.parametrize("i", [2, 3])
def test_theorem1_case(i):
    for M in ("T", "SL"):
        c = verify_theorem1_case(i, M)
        assert c.passed and c.perm4 == "S_4"

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from semivar.words import (
    DomainError, Word, apply_permutation, canonical_form, canonical_words, compose, concat, content,
    enumerate_words, is_linear, length, letter, letter_name, similar, substitute, subscripted,
)

W = Word.parse
words = st.lists(st.integers(0, 3), min_size=1, max_size=6).map(lambda xs: Word(tuple(xs)))


@pytest.mark.parametrize("a,b,expected", [("xy", "z", "xyz"), ("x", "x", "x^2"), ("xy", "yx", "xyyx")])
def test_concat(a, b, expected):
    assert concat(W(a), W(b)) == W(expected)
    assert W(a) * W(b) == W(expected)


@pytest.mark.parametrize("w,letters", [("xyx", "xy"), ("x", "x"), ("x1x2x3", ["x1", "x2", "x3"])])
def test_content(w, letters):
    assert content(W(w)) == {letter(a) for a in letters}


@pytest.mark.parametrize("w,n", [("xyx", 3), ("x", 1), ("x^2y", 3)])
def test_length(w, n):
    assert length(W(w)) == n


@pytest.mark.parametrize("w,lin", [("xyz", True), ("xyx", False), ("x", True)])
def test_is_linear(w, lin):
    assert is_linear(W(w)) is lin


def test_similar_examples():
    assert similar(W("xyx"), W("yxy")) == {letter("x"): letter("y"), letter("y"): letter("x")}
    assert similar(W("xyx"), W("xxy")) is None
    assert similar(W("xx"), W("yy")) == {letter("x"): letter("y")}


def test_apply_permutation_examples():
    swap = {letter("x"): letter("y"), letter("y"): letter("x")}
    assert apply_permutation(swap, W("xyx")) == W("yxy")
    w = W("xyzzy")
    assert apply_permutation({a: a for a in content(w)}, w) == w
    cyc = {subscripted(1): subscripted(2), subscripted(2): subscripted(3), subscripted(3): subscripted(1)}
    assert apply_permutation(cyc, W("x1x2x3")) == W("x2x3x1")


def test_apply_permutation_domain_error():
    with pytest.raises(DomainError):
        apply_permutation({letter("x"): letter("y")}, W("xz"))


@pytest.mark.parametrize("w,theta,expected", [
    ("x^2y", {"x": "x", "y": "x"}, "x^3"),
    ("xy", {"x": "ab", "y": "c"}, "abc"),
    ("xyz", {"x": "x", "y": "y", "z": "xy"}, "xyxy"),
])
def test_substitute(w, theta, expected):
    th = {letter(k): W(v) for k, v in theta.items()}
    assert substitute(W(w), th) == W(expected)


def test_substitute_domain_error():
    with pytest.raises(DomainError):
        substitute(W("xy"), {letter("x"): W("z")})


@pytest.mark.parametrize("w,pattern", [("zyz", (0, 1, 0)), ("xyz", (0, 1, 2)), ("y^2", (0, 0))])
def test_canonical_form(w, pattern):
    assert canonical_form(W(w)).letters == pattern


def test_enumerate_words_examples():
    assert [str(w) for w in enumerate_words(1, 3)] == ["x", "xx", "xxx"]
    assert [str(w) for w in enumerate_words(2, 2)] == ["x", "y", "xx", "xy", "yx", "yy"]
    assert len(enumerate_words(3, 4)) == 120


@pytest.mark.parametrize("m,B", [(1, 5), (2, 4), (3, 3), (4, 2)])
def test_enumerate_count_and_order(m, B):
    ws = enumerate_words(m, B)
    assert len(ws) == sum(m ** k for k in range(1, B + 1))
    keys = [(len(w), w.letters) for w in ws]
    assert keys == sorted(keys)


def test_letter_names_round_trip():
    for a in range(40):
        assert letter(letter_name(a)) == a
    assert str(W("x1x2x3")) == "x1x2x3"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        W("x+y")


def test_canonical_form_idempotent_exhaustive():
    for n in range(1, 7):
        for t in itertools.product(range(4), repeat=n):
            c = canonical_form(Word(t))
            assert canonical_form(c) == c


def test_canonical_words_are_canonical_and_complete():
    got = {w.letters for w in canonical_words(5)}
    expected = {canonical_form(Word(t)).letters
                for n in range(1, 6) for t in itertools.product(range(5), repeat=n)}
    assert got == expected


@given(words, words, words)
def test_similar_is_an_equivalence(a, b, c):
    assert similar(a, a) is not None
    assert (similar(a, b) is None) == (similar(b, a) is None)
    if similar(a, b) is not None and similar(b, c) is not None:
        assert similar(a, c) is not None


@given(words, words)
def test_similar_iff_same_canonical_form(a, b):
    assert (similar(a, b) is not None) == (canonical_form(a) == canonical_form(b))


perms4 = st.permutations(range(4)).map(lambda p: dict(enumerate(p)))


@given(perms4, perms4, words)
def test_composition_is_left_to_right(s, t, w):
    # apply s first, then t
    assert apply_permutation(t, apply_permutation(s, w)) == apply_permutation(compose(s, t), w)


@given(words, st.dictionaries(st.integers(0, 3), words, min_size=4, max_size=4))
def test_content_of_substitution(a, theta):
    img = substitute(a, theta)
    assert content(img) == frozenset().union(*(content(theta[x]) for x in content(a)))


@given(words)
def test_linear_iff_content_size(w):
    assert is_linear(w) == (len(content(w)) == length(w))

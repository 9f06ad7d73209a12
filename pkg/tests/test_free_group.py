import pytest
from hypothesis import given, strategies as st

from symquandle.braid import BraidWord, artin_endo
from symquandle.free_group import (
    FreeGroupEndo,
    FreeWord,
    apply_endo,
    compose_endo,
    invert,
    is_identity_endo,
    multiply,
    reduce,
)

from oracles import naive_reduce

letters = st.lists(st.integers(1, 4).flatmap(lambda i: st.sampled_from([i, -i])), max_size=30)
words = letters.map(FreeWord)


def W(text):
    return FreeWord.parse(text)


def test_reduce_examples():
    assert reduce([1, 2, -2]) == W("1")
    assert reduce([]) == W("")
    assert reduce([1, -1, 1]) == W("1")


@given(letters)
def test_reduce_matches_repeated_scan(raw):
    assert reduce(raw).letters == naive_reduce(raw)


@given(letters)
def test_reduce_idempotent(raw):
    w = reduce(raw)
    assert reduce(w.letters) == w


def test_reduce_rejects_zero():
    with pytest.raises(ValueError):
        reduce([1, 0])


def test_multiply_examples():
    assert multiply(W("1"), W("-1")) == W("")
    assert multiply(W("1 2"), W("-2 3")) == W("1 3")
    assert multiply(W(""), W("2 -1")) == W("2 -1")


@given(words, words, words)
def test_multiply_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_invert_examples():
    assert invert(W("1 2")) == W("-2 -1")
    assert invert(W("")) == W("")
    assert invert(W("-1")) == W("1")


@given(words)
def test_inverse_cancels(w):
    assert multiply(w, invert(w)) == W("")
    assert not (w * ~w)


def test_pairs_round_trip():
    w = FreeWord.from_pairs([(1, 1), (3, -1)])
    assert w == W("1 -3")
    assert w.pairs() == [(1, 1), (3, -1)]
    assert w.pretty() == "x1 x3^-1"


E = FreeGroupEndo(2, [W("1 2 -1"), W("1")])


def test_apply_endo_examples():
    assert apply_endo(FreeGroupEndo.identity(2), W("1 2")) == W("1 2")
    assert apply_endo(E, W("2")) == W("1")
    assert apply_endo(E, W("1 2")) == W("1 2")


def test_apply_endo_out_of_range():
    with pytest.raises(IndexError):
        apply_endo(E, W("3"))


def test_endo_rejects_bad_images():
    with pytest.raises(ValueError):
        FreeGroupEndo(2, [W("1")])
    with pytest.raises(ValueError):
        FreeGroupEndo(2, [W("1"), W("3")])


@given(words.filter(lambda w: w.max_index() <= 2), words.filter(lambda w: w.max_index() <= 2))
def test_apply_endo_is_homomorphism(a, b):
    assert apply_endo(E, a * b) == apply_endo(E, a) * apply_endo(E, b)


def test_compose_examples():
    ident = FreeGroupEndo.identity(2)
    assert compose_endo(ident, E) == E
    assert compose_endo(E, ident) == E
    s = artin_endo(BraidWord(2, [1]))
    t = artin_endo(BraidWord(2, [-1]))
    assert is_identity_endo(compose_endo(s, t))
    assert is_identity_endo(compose_endo(t, s))


def test_compose_order_is_second_argument_first():
    swap = FreeGroupEndo(2, [W("2"), W("1")])
    square = FreeGroupEndo(2, [W("1 1"), W("2")])
    c = compose_endo(swap, square)  # square first, then swap
    assert c.images == (W("2 2"), W("1"))


def test_compose_rank_mismatch():
    with pytest.raises(ValueError):
        compose_endo(FreeGroupEndo.identity(2), FreeGroupEndo.identity(3))


endo3 = st.lists(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=4), min_size=3, max_size=3).map(
    lambda ims: FreeGroupEndo(3, [FreeWord(w) for w in ims]))


@given(endo3, endo3, endo3)
def test_compose_associative(a, b, c):
    assert compose_endo(compose_endo(a, b), c) == compose_endo(a, compose_endo(b, c))


def test_is_identity_endo():
    assert is_identity_endo(FreeGroupEndo.identity(3))
    assert not is_identity_endo(FreeGroupEndo(2, [W("2"), W("1")]))
    assert is_identity_endo(artin_endo(BraidWord(3, [1, 2, 1, -2, -1, -2])))

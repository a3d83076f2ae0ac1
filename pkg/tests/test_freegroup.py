import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from level2mcg.freegroup import (
    SubstEndo,
    Word,
    WordSyntaxError,
    apply,
    compose,
    concat,
    descends_to_pi,
    format_word,
    invert,
    parse_word,
    reduce,
    relator,
)
from level2mcg.catalog import inverse_endo, parse_expr
from level2mcg.suites import catalog_generators
from level2mcg.tensor import GenusMismatch

from oracles import free_reduce

G = 4


def letters(g, max_len):
    return st.lists(st.integers(min_value=1, max_value=g).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len)


def words(g=G, max_len=30):
    return letters(g, max_len).map(lambda a: Word(g, tuple(a)))


def endos(g=G):
    return st.lists(words(g, 6), min_size=g, max_size=g).map(lambda ims: SubstEndo(g, tuple(ims)))


def w(g, *a):
    return Word(g, a)


def test_concat_and_invert_examples():
    assert concat(w(2, 1), w(2, -1)) == Word.identity(2)
    assert invert(w(2, 1, 2)) == w(2, -2, -1)
    assert w(2, 1, 2) * w(2, 1) == w(2, 1, 2, 1)


def test_reduce_relator_image_example():
    # image of the relator under the g=2 slide inverse, written out unreduced
    raw = [-2, -1, -1, 2, -2, 1, 1, 2, 1, 1, 2, 2]
    assert reduce(2, raw) == w(2, 1, 1, 2, 2)


def test_relator_examples():
    assert relator(1) == w(1, 1, 1)
    assert relator(3) == w(3, 1, 1, 2, 2, 3, 3)
    assert all(len(relator(g)) == 2 * g for g in range(1, 9))


def test_apply_examples():
    u = w(3, 1, -2, 3)
    assert apply(SubstEndo.identity(3), u) == u
    e = inverse_endo(parse_expr("Y(1,2)", 3))
    assert apply(e, w(3, 3)) == w(3, 3)
    e2 = inverse_endo(parse_expr("Y(1,2)", 2))
    assert apply(e2, w(2, 2)) == w(2, -2, 1, 1, 2, 2)


def test_descends_examples():
    assert descends_to_pi(SubstEndo.identity(3))
    assert descends_to_pi(inverse_endo(parse_expr("Y(1,2)", 2)))
    collapse = SubstEndo(2, (w(2, 1), w(2, 1)))
    assert apply(collapse, relator(2)) == w(2, 1, 1, 1, 1)
    assert not descends_to_pi(collapse)


def test_genus_mismatch():
    with pytest.raises(GenusMismatch):
        concat(w(2, 1), w(3, 1))
    with pytest.raises(GenusMismatch):
        apply(SubstEndo.identity(2), w(3, 1))
    with pytest.raises(ValueError):
        Word(2, (3,))
    with pytest.raises(ValueError):
        SubstEndo(2, (w(2, 1),))


def test_parse_word_examples():
    assert parse_word("g1 g2^-1 g1^2", 3) == w(3, 1, -2, 1, 1)
    assert parse_word("1", 3) == Word.identity(3)
    assert parse_word("", 3) == Word.identity(3)
    assert format_word(w(3, 1, -2, -2, 3)) == "g1 g2^-2 g3"
    with pytest.raises(WordSyntaxError) as err:
        parse_word("g1 x2", 3)
    assert err.value.position == 2
    with pytest.raises(WordSyntaxError):
        parse_word("g1 g4", 3)


@settings(max_examples=200, deadline=None)
@given(words(max_len=60))
def test_format_parse_round_trip(u):
    assert parse_word(format_word(u), G) == u
    assert format_word(parse_word(format_word(u), G)) == format_word(u)


@settings(max_examples=300, deadline=None)
@given(letters(G, 200))
def test_reduce_matches_oracle_and_is_idempotent(a):
    u = Word(G, tuple(a))
    assert list(u.letters) == free_reduce(a)
    assert Word(G, u.letters) == u
    assert all(x != -y for x, y in zip(u.letters, u.letters[1:]))


@settings(max_examples=150, deadline=None)
@given(endos(), words(), words())
def test_apply_distributes(e, u, v):
    assert apply(e, concat(u, v)) == concat(apply(e, u), apply(e, v))
    assert apply(e, invert(u)) == invert(apply(e, u))


@settings(max_examples=100, deadline=None)
@given(endos(), endos(), endos(), words())
def test_compose_associative_with_unit(e1, e2, e3, u):
    assert compose(compose(e1, e2), e3) == compose(e1, compose(e2, e3))
    one = SubstEndo.identity(G)
    assert compose(one, e1) == e1 == compose(e1, one)
    assert apply(compose(e1, e2), u) == apply(e1, apply(e2, u))


@pytest.mark.parametrize("g", range(2, 9))
def test_catalog_endos_descend(g):
    rng = random.Random(g)
    for x in catalog_generators(g):
        if not x.is_formal:
            assert descends_to_pi(inverse_endo(x)), str(x)
    for _ in range(5):
        a = tuple(rng.choice([1, -1]) * rng.randint(1, g) for _ in range(8))
        assert descends_to_pi(inverse_endo(parse_expr(f"push({format_word(Word(g, a))})", g)))

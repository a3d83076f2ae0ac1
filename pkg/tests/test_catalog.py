import random

import pytest

from level2mcg.catalog import (
    ExprSyntaxError,
    FormalOnly,
    IndexOutOfRange,
    McgExpr,
    Push,
    TSquarePair,
    TSquareQuad,
    YSlide,
    forward_endo,
    generator_count_identity,
    inverse_endo,
    parse_expr,
    theorem_generators,
)
from level2mcg.freegroup import SubstEndo, Word, apply, compose, descends_to_pi, parse_word
from level2mcg.homology import is_level2
from level2mcg.suites import catalog_generators, random_expr


def test_identity_expression():
    assert inverse_endo(McgExpr.identity(3)) == SubstEndo.identity(3)
    assert inverse_endo(parse_expr("1", 3)) == SubstEndo.identity(3)


def test_slide_inverse_images_g2():
    e = inverse_endo(parse_expr("Y(1,2)", 2))
    assert e.images == (parse_word("g2^-1 g1^-1 g2", 2), parse_word("g2^-1 g1^2 g2^2", 2))
    e = inverse_endo(parse_expr("Y(2,1)", 2))
    assert e.images == (parse_word("g1 g2^2", 2), parse_word("g2^-2 g1^-1 g2^-1 g1 g2^2", 2))


def test_parse_examples():
    assert parse_expr("Y(1,2)", 4) == McgExpr.of(4, YSlide(1, 2))
    pair = parse_expr("Y(1,2)^-1 * Y(2,1)", 4)
    assert pair.factors == ((YSlide(1, 2), -1), (YSlide(2, 1), 1))
    quad = parse_expr("T2(1,2,3,4)", 4)
    assert quad.is_formal and quad.factors == ((TSquareQuad(1, 2, 3, 4), 1),)
    push = parse_expr("push(g1 g2^-1) · T2(1,3)^-1", 4)
    assert push.factors == ((Push(parse_word("g1 g2^-1", 4)), 1), (TSquarePair(1, 3), -1))
    assert str(parse_expr(str(push), 4)) == str(push)


def test_parse_errors():
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("Y(1,2) * Q(1)", 4)
    assert err.value.position == 9
    with pytest.raises(ExprSyntaxError):
        parse_expr("Y(1,2", 4)
    with pytest.raises(IndexOutOfRange):
        parse_expr("Y(1,5)", 4)
    with pytest.raises((IndexOutOfRange, ExprSyntaxError)):
        parse_expr("Y(2,2)", 4)
    with pytest.raises((IndexOutOfRange, ExprSyntaxError)):
        parse_expr("T2(1,3,2,4)", 4)


def test_formal_only():
    with pytest.raises(FormalOnly):
        inverse_endo(parse_expr("Y(1,2) * T2(1,2,3,4)", 4))


def test_theorem_generator_counts():
    assert len(theorem_generators(4, "thm_1_2")) == 10
    assert len(theorem_generators(5, "thm_1_2")) == 20
    assert len(theorem_generators(4, "thm_1_1")) == 10
    with pytest.raises(ValueError):
        theorem_generators(3, "thm_1_2")


@pytest.mark.parametrize("g,count", [(4, 10), (6, 35), (10, 165)])
def test_generator_count_identity(g, count):
    c = generator_count_identity(g)
    assert c.count == c.predicted == count and c.equal
    with pytest.raises(ValueError):
        generator_count_identity(3)


@pytest.mark.parametrize("g", range(2, 9))
def test_catalog_is_level2_and_descends(g):
    for x in catalog_generators(g):
        if x.is_formal:
            continue
        e = inverse_endo(x)
        assert is_level2(e) and descends_to_pi(e), str(x)
        assert compose(e, forward_endo(x)) == SubstEndo.identity(g)


@pytest.mark.parametrize("g", range(2, 9))
def test_pair_twist_matches_parsed_composite(g):
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            if i != j:
                lhs = inverse_endo(McgExpr.of(g, TSquarePair(i, j)))
                assert lhs == inverse_endo(parse_expr(f"Y({i},{j})^-1 * Y({j},{i})", g))


@pytest.mark.parametrize("g", [3, 5])
def test_inverse_of_product(g):
    rng = random.Random(g)
    for _ in range(200):
        a = random_expr(rng, g, 2)
        b = random_expr(rng, g, 2)
        u = Word(g, tuple(rng.choice([1, -1]) * rng.randint(1, g) for _ in range(10)))
        # the product ab is the map (b after a), so (ab)^{-1} = a^{-1} after b^{-1}
        direct = apply(inverse_endo(a), apply(inverse_endo(b), u))
        assert apply(inverse_endo(a * b), u) == direct
        assert inverse_endo((a * b).inverse()) == forward_endo(a * b)

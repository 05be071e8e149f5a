"""Grammar, parser, and printer behaviour."""

import random

import pytest

from boolelab.terms import (
    Add,
    IntLit,
    Mul,
    ParseError,
    Sub,
    Var,
    depth,
    parse,
    pretty,
    variables,
)
from helpers import exhaustive_terms, random_term

x, y, z = Var("x"), Var("y"), Var("z")


def test_parse_product():
    assert parse("x*y") == Mul(x, y)


def test_parse_squared_double():
    # squares are entered as explicit products
    assert parse("(2x)*(2x)") == Mul(Mul(IntLit(2), x), Mul(IntLit(2), x))


def test_parse_precedence():
    assert parse("x + y - x y") == Sub(Add(x, y), Mul(x, y))


def test_parse_left_associative():
    assert parse("x - y - z") == Sub(Sub(x, y), z)
    assert parse("x*y*z") == Mul(Mul(x, y), z)


def test_juxtaposition():
    assert parse("2x") == Mul(IntLit(2), x)
    assert parse("x (y + z)") == Mul(x, Add(y, z))
    assert parse("x y z") == Mul(Mul(x, y), z)


def test_pretty_product():
    assert pretty(Mul(x, y)) == "x*y"


def test_pretty_zero_minus():
    assert pretty(Sub(IntLit(0), x)) == "0 - x"


def test_pretty_sum_of_product():
    assert pretty(Add(x, Mul(y, z))) == "x + y*z"


def test_unary_minus_rejected():
    for text in ("-x", "x + -y", "(-x)"):
        with pytest.raises(ParseError) as info:
            parse(text)
        assert "0 - t" in str(info.value)


def test_syntax_errors_have_positions():
    for text in ("x +", "(", "x )", ")", "x * * y", ""):
        with pytest.raises(ParseError) as info:
            parse(text)
        assert info.value.position >= 0


def test_identifiers():
    assert parse("alpha_2 + B9") == Add(Var("alpha_2"), Var("B9"))


def test_constructor_validation():
    with pytest.raises(ValueError):
        IntLit(-1)
    with pytest.raises(ValueError):
        Var("")
    with pytest.raises(ValueError):
        Var("2x")


def test_variables_sorted_unique():
    assert variables(parse("y*x + y - 1")) == ("x", "y")


def test_depth_counts_leaves_as_one():
    assert depth(x) == 1
    assert depth(parse("x + y")) == 2
    assert depth(parse("x*(y + z)")) == 3


def test_round_trip_random():
    rng = random.Random(20210)
    for _ in range(300):
        t = random_term(rng, ("x", "y", "z"), rng.randint(1, 6))
        assert parse(pretty(t)) == t


def test_round_trip_exhaustive_shallow():
    leaves = (x, y, IntLit(0), IntLit(2))
    for t in exhaustive_terms(leaves, 2):
        assert parse(pretty(t)) == t


def test_parser_totality_fuzz():
    # every input either parses or raises a positioned ParseError
    rng = random.Random(7)
    alphabet = "xy01+-*() "
    for _ in range(500):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 12)))
        try:
            parse(text)
        except ParseError as err:
            assert err.position >= 0

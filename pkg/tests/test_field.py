from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minusone.errors import ScalarDivisionByZero, ScalarParseError
from minusone.field import (
    GaussianRational,
    I,
    as_scalar,
    conjugate,
    from_json,
    is_real,
    parse_scalar,
    render_scalar,
    scalar_arith,
    to_json,
)

from conftest import rationals

gaussians = st.builds(GaussianRational, rationals, rationals)
scalars = st.one_of(rationals, gaussians)


def test_rational_addition():
    assert scalar_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)


def test_i_squared():
    assert scalar_arith(I, I, "mul") == -1
    assert isinstance(I * I, Fraction)


def test_gaussian_division():
    assert scalar_arith(GaussianRational(1, 1), GaussianRational(1, -1), "div") == I


def test_division_by_zero_is_catchable():
    with pytest.raises(ScalarDivisionByZero):
        scalar_arith(Fraction(1), Fraction(0), "div")
    with pytest.raises(ScalarDivisionByZero):
        scalar_arith(I, GaussianRational(0, 0), "div")
    with pytest.raises(ZeroDivisionError):
        I / 0


def test_unknown_op():
    with pytest.raises(ValueError):
        scalar_arith(1, 2, "pow")


@pytest.mark.parametrize(
    "text, value",
    [
        ("−3/4", Fraction(-3, 4)),
        ("-3/4", Fraction(-3, 4)),
        ("0", Fraction(0)),
        ("6/4", Fraction(3, 2)),
        ("1/2+2/3i", GaussianRational(Fraction(1, 2), Fraction(2, 3))),
        ("-1-i", GaussianRational(-1, -1)),
        ("i", I),
        ("3+0i", Fraction(3)),
    ],
)
def test_parse(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text, position", [("", 0), ("1/", 2), ("1/0", 2), ("abc", 0), ("1/2x", 3), ("1+", 2)])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ScalarParseError) as info:
        parse_scalar(text)
    assert info.value.position == position


def test_normalization():
    q = parse_scalar("10/4")
    assert (q.numerator, q.denominator) == (5, 2)
    assert parse_scalar("0/7") == Fraction(0, 1)
    assert is_real(GaussianRational(2, 0))
    assert conjugate(GaussianRational(1, 2)) == GaussianRational(1, -2)


def test_json_encoding():
    assert to_json(Fraction(-3, 4)) == "-3/4"
    assert to_json(Fraction(5)) == "5"
    assert to_json(GaussianRational(Fraction(1, 2), -1)) == {"re": "1/2", "im": "-1"}
    assert from_json({"re": "1/2", "im": "-1"}) == GaussianRational(Fraction(1, 2), -1)
    assert from_json("7/3") == Fraction(7, 3)


@given(scalars)
def test_render_parse_round_trip(a):
    assert parse_scalar(render_scalar(a)) == a
    assert render_scalar(parse_scalar(render_scalar(a))) == render_scalar(a)
    assert from_json(to_json(a)) == a


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0


@given(scalars)
def test_multiplicative_inverse(a):
    if a != 0:
        assert a * (1 / a) == 1
        assert scalar_arith(a, a, "div") == 1


@given(rationals)
def test_rationals_embed(q):
    g = GaussianRational(q, 0)
    assert g == q and as_scalar(g) == q and isinstance(as_scalar(g), Fraction)

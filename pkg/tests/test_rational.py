from fractions import Fraction

import pytest
from hypothesis import given

from rwhitney.rational import (
    as_rational,
    binomial,
    factorial,
    format_rational,
    parse_rational,
    to_decimal_string,
)

from conftest import small_fractions


def test_addition_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    zero = Fraction(1, 2) + Fraction(-1, 2)
    assert (zero.numerator, zero.denominator) == (0, 1)
    assert Fraction(2, 3) + Fraction(-1, 2) == Fraction(1, 6)


def test_mul_div_neg_examples():
    assert Fraction(2, 3) * Fraction(3, 4) == Fraction(1, 2)
    assert Fraction(1) / Fraction(5) == Fraction(1, 5)
    assert Fraction(-1, 2) * Fraction(-1, 3) == Fraction(1, 6)
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / Fraction(0)


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (5, 120), (10, 3628800)])
def test_factorial(n, expected):
    assert factorial(n) == expected


def test_factorial_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize(
    "n,k,expected",
    [(4, 2, 6), (4, 0, 1), (4, 4, 1), (4, 5, 0), (4, -1, 0), (0, 0, 1), (10, 3, 120)],
)
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_canonical_text():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(0) == "0"
    assert parse_rational(" -3 / 2 ") == Fraction(-3, 2)
    assert parse_rational("7") == 7


@pytest.mark.parametrize("bad", ["", "1.5", "1/", "a", "1/-2", "2/3/4"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_as_rational_rejects_float_and_bool():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    assert as_rational("2/4") == Fraction(1, 2)


def test_decimal_display():
    assert to_decimal_string(Fraction(1, 3), 4) == "0.3333"
    assert to_decimal_string(Fraction(-1, 30), 3) == "-0.033"


@given(small_fractions)
def test_text_round_trip(a):
    assert parse_rational(format_rational(a)) == a


@given(small_fractions, small_fractions, small_fractions)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c

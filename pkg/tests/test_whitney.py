from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rwhitney.poly import MPoly, q, r, s
from rwhitney.rational import binomial
from rwhitney.whitney import (
    WhitneyTriangle,
    orthogonality_sums,
    whitney_definitional_oracle,
    whitney_egf_check,
    whitney_egf_column,
    whitney_first,
    whitney_second,
    whitney_second_explicit,
    whitney_translated,
    whitney_translation,
)

from conftest import nonzero_fractions, small_fractions


def _falling(v, n):
    out = Fraction(1)
    for i in range(n):
        out *= v - i
    return out


def test_second_kind_examples():
    assert whitney_second(0, 0) == 1
    assert whitney_second(3, 0) == r**3
    assert whitney_second(2, 1) == q + 2 * r


def test_first_kind_examples():
    assert whitney_first(1, 1) == 1
    assert whitney_first(1, 0) == -r
    assert whitney_first(0, 0) == 1
    assert whitney_first(2, 0) == r * (r + q)


@pytest.mark.parametrize("n,k", [(-1, 0), (2, 3), (0, -1)])
def test_bad_indices(n, k):
    with pytest.raises(ValueError):
        whitney_second(n, k)
    with pytest.raises(ValueError):
        whitney_first(n, k)


def test_bad_kind():
    with pytest.raises(ValueError):
        WhitneyTriangle("third")


def test_explicit_examples():
    assert whitney_second_explicit(2, 1, 1, 0) == 1
    assert whitney_second_explicit(2, 1, 2, 3) == 8
    for n in range(6):
        assert whitney_second_explicit(n, n, Fraction(-3, 7), Fraction(5, 2)) == 1


def test_explicit_rejects_zero_q():
    with pytest.raises(ZeroDivisionError):
        whitney_second_explicit(3, 1, 0, 1)


def test_oracle_rows_examples():
    assert whitney_definitional_oracle("second", 1) == [r, MPoly.const(1)]
    assert whitney_definitional_oracle("first", 0) == [MPoly.const(1)]
    assert whitney_definitional_oracle("first", 2) == [r * (r + q), -(2 * r + q), MPoly.const(1)]


@pytest.mark.parametrize("kind", ["first", "second"])
@pytest.mark.parametrize("n", range(11))
def test_recurrence_matches_definition(kind, n):
    tri = WhitneyTriangle(kind)
    assert list(tri.row(n)) == whitney_definitional_oracle(kind, n)


@settings(max_examples=40)
@given(st.integers(0, 8), nonzero_fractions, small_fractions, small_fractions)
def test_expansions_hold_numerically(n, qv, rv, xv):
    # plug numbers straight into both basis expansions
    pt = {"q": qv, "r": rv}
    second = sum(qv**k * whitney_second(n, k).evaluate(pt).to_rational() * _falling(xv, k) for k in range(n + 1))
    assert second == (qv * xv + rv) ** n
    first = sum(whitney_first(n, k).evaluate(pt).to_rational() * (qv * xv + rv) ** k for k in range(n + 1))
    assert first == qv**n * _falling(xv, n)


@pytest.mark.parametrize("n", range(8))
def test_column_zero(n):
    assert whitney_second(n, 0) == r**n
    expected = MPoly.const(1)
    for i in range(n):
        expected = expected * (-(r + q * i))
    assert whitney_first(n, 0) == expected
    assert whitney_first(n, n) == 1 and whitney_second(n, n) == 1


def test_q_zero_is_allowed_in_recurrence():
    for n in range(6):
        for k in range(n + 1):
            assert whitney_second(n, k).evaluate({"q": 0}) == (r ** (n - k)).scale(binomial(n, k))


@settings(max_examples=25)
@given(st.integers(0, 9), st.data(), nonzero_fractions, small_fractions)
def test_explicit_matches_triangle(n, data, qv, rv):
    k = data.draw(st.integers(0, n))
    assert whitney_second(n, k).evaluate({"q": qv, "r": rv}) == whitney_second_explicit(n, k, qv, rv)


@pytest.mark.parametrize("k,n_max", [(0, 4), (1, 5), (3, 8)])
def test_egf_check(k, n_max):
    assert whitney_egf_check(k, n_max)


def test_egf_column_zero_below_k():
    col = whitney_egf_column(3, 5)
    assert all(c.is_zero() for c in col[:3])


def test_translation_examples():
    assert whitney_translation(0, 0)
    lhs, rhs = whitney_translated(2, 1)
    assert lhs == q + 2 * r + 2 * s
    assert rhs == (q + 2 * s) + 2 * r
    assert whitney_translation(5, 2)


@pytest.mark.parametrize("n", range(7))
def test_orthogonality_small(n):
    for k in range(n + 1):
        a, b = orthogonality_sums(n, k)
        delta = 1 if n == k else 0
        assert a == delta and b == delta


def test_concurrent_extension_is_consistent():
    tri = WhitneyTriangle("second")
    with ThreadPoolExecutor(max_workers=4) as pool:
        rows = list(pool.map(tri.row, [9, 5, 9, 7, 3, 9]))
    assert rows[0] == rows[2] == rows[5]
    assert tri.max_n == 9
    assert list(tri.row(9)) == whitney_definitional_oracle("second", 9)

"""Bernoulli polynomials with a q parameter, and their poly-Bernoulli cousins.

``B_n^q(r)`` is defined here as the W-weighted alternating sum

    B_n^q(r) = sum_k (-1)^k k!/(k+1) W(n, k)

which needs no division by q.  The closed generating function and the
explicit double sum are kept as independent routes for cross-checking.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .poly import MPoly, r, s, z
from .rational import RationalLike, as_rational, binomial, factorial
from .series import (
    TruncSeries,
    egf_coefficients,
    exp_minus_one_over,
    series_div,
    series_exp_linear,
    series_log1p,
    series_polylog,
    shift_down,
)
from .whitney import whitney_second

ROUTES = ("wsum", "explicit", "gf")


def _weight(k: int) -> Fraction:
    return Fraction((-1) ** k * factorial(k), k + 1)


@lru_cache(maxsize=None)
def bernoulli_q_wsum(n: int) -> MPoly:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    total = MPoly()
    for k in range(n + 1):
        total = total + whitney_second(n, k).scale(_weight(k))
    return total


def bernoulli_q_explicit(n: int, q_val: RationalLike, r_val: RationalLike) -> Fraction:
    """Evaluate the explicit double sum at numeric q != 0 and r."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    qv, rv = as_rational(q_val), as_rational(r_val)
    if qv == 0:
        raise ZeroDivisionError("the explicit double sum divides by q^k; q must be nonzero")
    powers = [(rv + j * qv) ** n for j in range(n + 1)]
    total = Fraction(0)
    for k in range(n + 1):
        inner = sum((-1) ** j * binomial(k, j) * powers[j] for j in range(k + 1))
        total += Fraction(inner) / (qv**k * (k + 1))
    return total


def bernoulli_q_gf_series(order: int) -> TruncSeries:
    """The closed generating function of B_n^q(r), truncated at t^order.

    q e^{rt} ln(1 + u) / (e^{qt} - 1) with u = (e^{qt} - 1)/q equals
    e^{rt} ln(1 + u) / u; both ln(1 + u) and u are divided by t before the
    series division, so the divisor starts with the unit 1.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    u = exp_minus_one_over("q", order + 1)
    ratio = series_div(shift_down(series_log1p(u), 1), shift_down(u, 1))
    return series_exp_linear(r, order) * ratio


def bernoulli_q_gf(n_max: int) -> list[MPoly]:
    """B_0^q(r) .. B_{n_max}^q(r) read off the closed generating function."""
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    return egf_coefficients(bernoulli_q_gf_series(n_max))


def bernoulli_q_numbers(n_max: int) -> list[MPoly]:
    """B_n^q = B_n^q(0), polynomials in q."""
    return [bernoulli_q_wsum(n).evaluate({"r": 0}) for n in range(n_max + 1)]


def poly_bernoulli_q_series(order: int, k: int) -> TruncSeries:
    """Generating function of B_{n,q}^{(k)}(z), truncated at t^order.

    Uses the e^{-zt} convention: GF = e^{-zt} Li_k(v) / v with
    v = (1 - e^{-qt})/q.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    v = exp_minus_one_over("q", order + 1, sign=-1)
    ratio = series_div(shift_down(series_polylog(v, k), 1), shift_down(v, 1))
    return series_exp_linear(-z, order) * ratio


def poly_bernoulli_q(n_max: int, k: int) -> list[MPoly]:
    """B_{n,q}^{(k)}(z) for n = 0..n_max."""
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    return egf_coefficients(poly_bernoulli_q_series(n_max, k))


def sign_bridge(n_max: int) -> list[tuple[MPoly, MPoly]]:
    """Pairs (B_n^q(r), (-1)^n B_{n,q}^{(1)}(z) with z -> r)."""
    pb = poly_bernoulli_q(n_max, 1)
    return [
        (bernoulli_q_wsum(n), pb[n].rename("z", "r").scale((-1) ** n))
        for n in range(n_max + 1)
    ]


def bernoulli_translated(n: int) -> tuple[MPoly, MPoly]:
    """Both sides of B_n^q(r+s) = sum_j C(n,j) r^(n-j) B_j^q(s)."""
    lhs = bernoulli_q_wsum(n).substitute("r", r + s)
    rhs = MPoly()
    for j in range(n + 1):
        rhs = rhs + (r ** (n - j)).scale(binomial(n, j)) * bernoulli_q_wsum(j).rename("r", "s")
    return lhs, rhs


def bernoulli_binomial_expansion(n: int) -> tuple[MPoly, MPoly]:
    """Both sides of B_n^q(r) = sum_j C(n,j) r^(n-j) B_j^q."""
    numbers = bernoulli_q_numbers(n)
    rhs = MPoly()
    for j in range(n + 1):
        rhs = rhs + (r ** (n - j)).scale(binomial(n, j)) * numbers[j]
    return bernoulli_q_wsum(n), rhs


def bernoulli_translation_check(n: int) -> bool:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    lhs, rhs = bernoulli_translated(n)
    lhs0, rhs0 = bernoulli_binomial_expansion(n)
    return lhs == rhs and lhs0 == rhs0

"""Identity-verification harness.

Each check produces an :class:`IdentityReport` holding both sides as
canonical strings.  The classical oracles at the top of this module
(Stirling numbers, r-Stirling numbers, classical Bernoulli values) use
their own recurrences and never touch :mod:`rwhitney.whitney`.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from .bernoulli import (
    bernoulli_binomial_expansion,
    bernoulli_q_explicit,
    bernoulli_q_gf,
    bernoulli_q_wsum,
    bernoulli_translated,
    sign_bridge,
)
from .cauchy import cauchy_first, cauchy_integral_oracle, cauchy_second_neg, cauchy_W_convolutions
from .poly import MPoly, q, r
from .rational import factorial, format_rational
from .series import TruncSeries, egf_coefficients, series_div, series_exp_linear, shift_down
from .whitney import (
    orthogonality_sums,
    whitney_definitional_oracle,
    whitney_egf_column,
    whitney_first,
    whitney_second,
    whitney_second_explicit,
    whitney_translated,
    triangle,
)


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    instance: dict = field(hash=False)
    status: str
    lhs: str
    rhs: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> IdentityReport:
        return cls(data["identity_id"], dict(data["instance"]), data["status"], data["lhs"], data["rhs"])

    def sort_key(self) -> tuple:
        return (self.identity_id, tuple(sorted(self.instance.items())))


def _text(value) -> str:
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return str(value)


def make_report(identity_id: str, instance: dict, lhs, rhs) -> IdentityReport:
    lhs_s, rhs_s = _text(lhs), _text(rhs)
    return IdentityReport(identity_id, instance, "pass" if lhs_s == rhs_s else "fail", lhs_s, rhs_s)


# -- classical oracles ---------------------------------------------------------


@lru_cache(maxsize=None)
def stirling_oracle(n: int, k: int) -> int:
    """Stirling numbers of the second kind, S(n,k) = S(n-1,k-1) + k S(n-1,k)."""
    if n < 0 or k < 0:
        raise ValueError(f"indices must be non-negative, got ({n}, {k})")
    if n == 0 or k == 0:
        return 1 if n == k else 0
    if k > n:
        return 0
    return stirling_oracle(n - 1, k - 1) + k * stirling_oracle(n - 1, k)


@lru_cache(maxsize=None)
def r_stirling_oracle(rho: int, n: int, k: int) -> int:
    """r-Stirling numbers of the second kind: partitions of {1..n} into k blocks
    with 1..rho in distinct blocks."""
    if rho < 0 or n < 0 or k < 0:
        raise ValueError(f"indices must be non-negative, got ({rho}, {n}, {k})")
    if n < rho or k < rho or k > n:
        return 0
    if n == rho:
        return 1 if k == rho else 0
    if k == 0:
        return 0
    return r_stirling_oracle(rho, n - 1, k - 1) + k * r_stirling_oracle(rho, n - 1, k)


def classical_bernoulli_oracle(n_max: int) -> list[Fraction]:
    """B_n = sum_k (-1)^k k!/(k+1) S(n,k)."""
    return [
        sum(
            (Fraction((-1) ** k * factorial(k), k + 1) * stirling_oracle(n, k) for k in range(n + 1)),
            Fraction(0),
        )
        for n in range(n_max + 1)
    ]


def classical_bernoulli_series(n_max: int, with_r: bool = False) -> list[MPoly]:
    """n! [t^n] of t e^{rt} / (e^t - 1) (or t / (e^t - 1) without r)."""
    order = n_max + 1
    e_minus_one = series_exp_linear(1, order) - TruncSeries.constant(1, order)
    ratio = series_div(TruncSeries.constant(1, n_max), shift_down(e_minus_one, 1))
    if with_r:
        ratio = series_exp_linear(r, n_max) * ratio
    return egf_coefficients(ratio)


def classical_bernoulli_at_integer(rho: int, n: int) -> Fraction:
    """B_n(rho) = sum_k (-1)^k k!/(k+1) S_rho(n+rho, k+rho)."""
    return sum(
        (Fraction((-1) ** k * factorial(k), k + 1) * r_stirling_oracle(rho, n + rho, k + rho) for k in range(n + 1)),
        Fraction(0),
    )


# -- cross-family identities ---------------------------------------------------


def inversion_wB_check(n: int) -> IdentityReport:
    """sum_j (-1)^n w(n,j) B_j^q(r) = n!/(n+1)."""
    lhs = MPoly()
    for j in range(n + 1):
        lhs = lhs + whitney_first(n, j) * bernoulli_q_wsum(j)
    return make_report("bernoulli.w_inversion", {"n": n}, lhs.scale((-1) ** n), Fraction(factorial(n), n + 1))


def cauchy_bernoulli_checks(n: int) -> list[IdentityReport]:
    """The four double sums linking c, c-hat and B through the Whitney triangles."""
    w_inner = [
        sum((whitney_first(k, j) * bernoulli_q_wsum(j) for j in range(k + 1)), MPoly())
        for k in range(n + 1)
    ]
    c_from_b = MPoly()
    chat_from_b = MPoly()
    for k in range(n + 1):
        term = whitney_first(n, k) * w_inner[k]
        c_from_b = c_from_b + term.scale(Fraction((-1) ** k, factorial(k)))
        chat_from_b = chat_from_b + term.scale(Fraction(1, factorial(k)))

    b_from_c = MPoly()
    b_from_chat = MPoly()
    for k in range(n + 1):
        inner_c = sum((whitney_second(k, j) * cauchy_first(j) for j in range(k + 1)), MPoly())
        inner_chat = sum((whitney_second(k, j) * cauchy_second_neg(j) for j in range(k + 1)), MPoly())
        w = whitney_second(n, k)
        b_from_c = b_from_c + (w * inner_c).scale((-1) ** k * factorial(k))
        b_from_chat = b_from_chat + (w * inner_chat).scale(factorial(k))

    inst = {"n": n}
    b = bernoulli_q_wsum(n)
    return [
        make_report("cauchy.from_bernoulli.first", inst, c_from_b, cauchy_first(n)),
        make_report("cauchy.from_bernoulli.second", inst, chat_from_b, cauchy_second_neg(n)),
        make_report("bernoulli.from_cauchy.first", inst, b_from_c, b),
        make_report("bernoulli.from_cauchy.second", inst, b_from_chat, b),
    ]


# -- suite families ------------------------------------------------------------

_RHO_VALUES = (1, 2, 3)


def _random_point(rng: random.Random) -> tuple[Fraction, Fraction]:
    qv = Fraction(rng.choice([i for i in range(-9, 10) if i]), rng.randint(1, 6))
    rv = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
    return qv, rv


def _whitney_family(n_max: int, rng: random.Random) -> Iterator[IdentityReport]:
    for kind in ("first", "second"):
        tri = triangle(kind)
        for n in range(n_max + 1):
            oracle = whitney_definitional_oracle(kind, n)
            for k in range(n + 1):
                yield make_report(f"whitney.{kind}.definition", {"n": n, "k": k}, tri(n, k), oracle[k])
    for n in range(n_max + 1):
        for k in range(n + 1):
            a, b = orthogonality_sums(n, k)
            delta = 1 if n == k else 0
            yield make_report("whitney.orthogonality.wW", {"n": n, "k": k}, a, delta)
            yield make_report("whitney.orthogonality.Ww", {"n": n, "k": k}, b, delta)
    for k in range(n_max + 1):
        column = whitney_egf_column(k, n_max)
        for n in range(n_max + 1):
            expected = whitney_second(n, k) if n >= k else MPoly()
            yield make_report("whitney.egf", {"n": n, "k": k}, column[n], expected)
    for n in range(n_max + 1):
        for k in range(n + 1):
            lhs, rhs = whitney_translated(n, k)
            yield make_report("whitney.translation", {"n": n, "k": k}, lhs, rhs)
    for n in range(n_max + 1):
        for k in range(n + 1):
            qv, rv = _random_point(rng)
            inst = {"n": n, "k": k, "q": format_rational(qv), "r": format_rational(rv)}
            yield make_report(
                "whitney.explicit", inst,
                whitney_second(n, k).evaluate({"q": qv, "r": rv}),
                whitney_second_explicit(n, k, qv, rv),
            )


def _reduction_family(n_max: int, rng: random.Random) -> Iterator[IdentityReport]:
    for n in range(n_max + 1):
        for k in range(n + 1):
            w = whitney_second(n, k)
            s_nk = stirling_oracle(n, k)
            yield make_report("whitney.reduce.stirling", {"n": n, "k": k}, w.evaluate({"q": 1, "r": 0}), s_nk)
            yield make_report("whitney.reduce.q_stirling", {"n": n, "k": k}, w.evaluate({"r": 0}), (q ** (n - k)).scale(s_nk))
            for rho in _RHO_VALUES:
                yield make_report(
                    "whitney.reduce.r_stirling", {"n": n, "k": k, "rho": rho},
                    w.evaluate({"q": 1, "r": rho}), r_stirling_oracle(rho, n + rho, k + rho),
                )
    stirling_b = classical_bernoulli_oracle(n_max)
    series_b = classical_bernoulli_series(n_max)
    series_poly = classical_bernoulli_series(n_max, with_r=True)
    for n in range(n_max + 1):
        b = bernoulli_q_wsum(n)
        yield make_report("classical.numbers.series", {"n": n}, series_b[n], stirling_b[n])
        yield make_report("bernoulli.reduce.classical_numbers", {"n": n}, b.evaluate({"q": 1, "r": 0}), stirling_b[n])
        yield make_report("bernoulli.reduce.classical_polynomial", {"n": n}, b.evaluate({"q": 1}), series_poly[n])
        numbers_sum = sum(
            ((q ** (n - k)).scale(Fraction((-1) ** k * factorial(k), k + 1) * stirling_oracle(n, k)) for k in range(n + 1)),
            MPoly(),
        )
        yield make_report("bernoulli.reduce.q_numbers", {"n": n}, b.evaluate({"r": 0}), numbers_sum)
        for rho in _RHO_VALUES:
            yield make_report(
                "bernoulli.reduce.r_stirling", {"n": n, "rho": rho},
                b.evaluate({"q": 1, "r": rho}), classical_bernoulli_at_integer(rho, n),
            )


def _bernoulli_family(n_max: int, rng: random.Random) -> Iterator[IdentityReport]:
    gf = bernoulli_q_gf(n_max)
    for n in range(n_max + 1):
        yield make_report("bernoulli.route.gf", {"n": n}, bernoulli_q_wsum(n), gf[n])
    for n in range(n_max + 1):
        for _ in range(5):
            qv, rv = _random_point(rng)
            inst = {"n": n, "q": format_rational(qv), "r": format_rational(rv)}
            yield make_report(
                "bernoulli.route.explicit", inst,
                bernoulli_q_wsum(n).evaluate({"q": qv, "r": rv}), bernoulli_q_explicit(n, qv, rv),
            )
    for n, (lhs, rhs) in enumerate(sign_bridge(n_max)):
        yield make_report("bernoulli.sign_law", {"n": n}, lhs, rhs)
    for n in range(n_max + 1):
        lhs, rhs = bernoulli_translated(n)
        yield make_report("bernoulli.translation", {"n": n}, lhs, rhs)
        lhs, rhs = bernoulli_binomial_expansion(n)
        yield make_report("bernoulli.binomial_expansion", {"n": n}, lhs, rhs)
        yield inversion_wB_check(n)


def _cauchy_family(n_max: int, rng: random.Random) -> Iterator[IdentityReport]:
    for n in range(n_max + 1):
        yield make_report("cauchy.first.integral", {"n": n}, cauchy_first(n), cauchy_integral_oracle("first", n))
        yield make_report("cauchy.second.integral", {"n": n}, cauchy_second_neg(n), cauchy_integral_oracle("second", n))
        a, b = cauchy_W_convolutions(n)
        yield make_report("cauchy.W_convolution.first", {"n": n}, a, Fraction(1, n + 1))
        yield make_report("cauchy.W_convolution.second", {"n": n}, b, Fraction((-1) ** n, n + 1))
        yield from cauchy_bernoulli_checks(n)


FAMILIES: dict[str, Callable[[int, random.Random], Iterator[IdentityReport]]] = {
    "whitney": _whitney_family,
    "reductions": _reduction_family,
    "bernoulli": _bernoulli_family,
    "cauchy": _cauchy_family,
}


def run_suite(n_max: int, seed: int = 0, families: list[str] | None = None) -> list[IdentityReport]:
    """Run every selected identity family for indices up to ``n_max``.

    Each family draws its random evaluation points from its own generator
    seeded by ``(seed, family)``, so selecting a subset of families leaves
    the remaining instances unchanged.  Reports come back sorted by
    (identity_id, instance).
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    names = list(FAMILIES) if families is None else families
    unknown = [f for f in names if f not in FAMILIES]
    if unknown:
        raise ValueError(f"unknown identity families {unknown}; choose from {sorted(FAMILIES)}")
    reports: list[IdentityReport] = []
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        reports.extend(FAMILIES[name](n_max, rng))
    reports.sort(key=IdentityReport.sort_key)
    return reports

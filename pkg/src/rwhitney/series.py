"""Truncated formal power series in t with polynomial coefficients.

Truncation order is always explicit: a series of order N carries the
coefficients of t^0 .. t^N and the coefficients beyond N are unknown, not
zero.  Binary operations return the smaller of the two orders.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import MPoly, PolyLike
from .rational import RationalLike, as_rational, factorial


class SeriesError(ValueError):
    """An operation's precondition on the series coefficients failed."""


class TruncSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[PolyLike]):
        if not coeffs:
            raise ValueError("a truncated series needs at least the t^0 coefficient")
        self.coeffs = tuple(MPoly.coerce(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c: PolyLike, order: int) -> TruncSeries:
        return cls([MPoly.coerce(c)] + [MPoly()] * order)

    @classmethod
    def t(cls, order: int) -> TruncSeries:
        return cls.from_list([0, 1], order)

    @classmethod
    def from_list(cls, coeffs: Sequence[PolyLike], order: int) -> TruncSeries:
        """Pad (with exact zeros) or cut ``coeffs`` to the given order."""
        coeffs = list(coeffs)[: order + 1]
        return cls(coeffs + [MPoly()] * (order + 1 - len(coeffs)))

    def __getitem__(self, i: int) -> MPoly:
        return self.coeffs[i]

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1])

    def __add__(self, other: TruncSeries) -> TruncSeries:
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-c for c in self.coeffs])

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return self + (-other)

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for i in range(n + 1):
            acc = MPoly()
            for j in range(i + 1):
                if a[j].is_zero() or b[i - j].is_zero():
                    continue
                acc = acc + a[j] * b[i - j]
            out.append(acc)
        return TruncSeries(out)

    def scale(self, c: PolyLike) -> TruncSeries:
        c = MPoly.coerce(c)
        return TruncSeries([c * a for a in self.coeffs])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries([{', '.join(str(c) for c in self.coeffs)}])"


def series_exp_linear(coefficient: PolyLike, order: int) -> TruncSeries:
    """e^{c t} = sum c^i t^i / i!, truncated at ``order``."""
    c = MPoly.coerce(coefficient)
    out = [MPoly.const(1)]
    power = MPoly.const(1)
    for i in range(1, order + 1):
        power = power * c
        out.append(power.scale(Fraction(1, factorial(i))))
    return TruncSeries(out)


def series_div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """a / b for b with a nonzero rational constant term."""
    b0 = b.coeffs[0]
    if not b0.is_constant() or b0.is_zero():
        raise SeriesError(f"divisor constant term {b0} is not a nonzero rational")
    inv = 1 / b0.to_rational()
    n = min(a.order, b.order)
    out: list[MPoly] = []
    for i in range(n + 1):
        acc = a.coeffs[i]
        for j in range(1, i + 1):
            if not b.coeffs[j].is_zero() and not out[i - j].is_zero():
                acc = acc - b.coeffs[j] * out[i - j]
        out.append(acc.scale(inv))
    return TruncSeries(out)


def shift_down(a: TruncSeries, m: int) -> TruncSeries:
    """a / t^m; the dropped coefficients must be zero and the order drops by m."""
    if m < 1:
        raise ValueError("shift must be a positive integer")
    if m > a.order:
        raise SeriesError(f"cannot shift a series of order {a.order} down by {m}")
    for i in range(m):
        if not a.coeffs[i].is_zero():
            raise SeriesError(f"coefficient of t^{i} is {a.coeffs[i]}, not zero")
    return TruncSeries(a.coeffs[m:])


def _require_zero_constant(u: TruncSeries, what: str) -> None:
    if not u.coeffs[0].is_zero():
        raise SeriesError(f"{what} needs a series with zero constant term, got {u.coeffs[0]}")


def _compose(u: TruncSeries, weights) -> TruncSeries:
    """sum_{m=1}^{N} weights(m) u^m for u with zero constant term."""
    n = u.order
    total = TruncSeries.constant(0, n)
    power = TruncSeries.constant(1, n)
    for m in range(1, n + 1):
        power = power * u
        total = total + power.scale(weights(m))
    return total


def series_log1p(u: TruncSeries) -> TruncSeries:
    """ln(1 + u) by the Mercator series."""
    _require_zero_constant(u, "log1p")
    return _compose(u, lambda m: MPoly.const(Fraction((-1) ** (m + 1), m)))


def series_polylog(u: TruncSeries, k: int) -> TruncSeries:
    """Li_k(u) = sum_{m>=1} u^m / m^k for any integer k."""
    _require_zero_constant(u, "polylog")
    if k >= 0:
        return _compose(u, lambda m: MPoly.const(Fraction(1, m**k)))
    return _compose(u, lambda m: MPoly.const(m ** (-k)))


def extract_egf_coefficient(a: TruncSeries, n: int) -> MPoly:
    """n! [t^n] a."""
    if n < 0 or n > a.order:
        raise SeriesError(f"index {n} outside the known coefficients 0..{a.order}")
    return a.coeffs[n].scale(factorial(n))


def egf_coefficients(a: TruncSeries) -> list[MPoly]:
    return [extract_egf_coefficient(a, n) for n in range(a.order + 1)]


def exp_minus_one_over(c: str, order: int, sign: int = 1) -> TruncSeries:
    """(e^{sign*c*t} - 1) / (sign*c) as a series with polynomial coefficients.

    The coefficient of t^i is (sign*c)^(i-1) / i!, so nothing is ever
    divided by the indeterminate ``c``.
    """
    cvar = MPoly.var(c) if sign == 1 else -MPoly.var(c)
    e = series_exp_linear(cvar, order)
    out = [MPoly()]
    for i in range(1, order + 1):
        out.append(e.coeffs[i].exact_div_monomial(c, 1).scale(sign))
    return TruncSeries(out)


def rational_series(values: Sequence[RationalLike], order: int) -> TruncSeries:
    return TruncSeries.from_list([MPoly.const(as_rational(v)) for v in values], order)

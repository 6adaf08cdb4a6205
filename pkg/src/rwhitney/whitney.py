"""r-Whitney numbers of the first and second kind as polynomials in q and r.

The kinds are fixed by the basis changes

    q^n (x)_n   = sum_k w(n, k) (q x + r)^k
    (q x + r)^n = sum_k q^k W(n, k) (x)_k

and computed from the recurrences

    W(n, k) = W(n-1, k-1) + (q k + r) W(n-1, k)
    w(n, k) = w(n-1, k-1) - (r + q (n-1)) w(n-1, k)

which the test-suite certifies against :func:`whitney_definitional_oracle`.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Literal

from .poly import MPoly, q, r, s, x
from .rational import RationalLike, as_rational, binomial, factorial
from .series import TruncSeries, egf_coefficients, exp_minus_one_over, series_exp_linear

Kind = Literal["first", "second"]


def _check_indices(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"indices must be non-negative, got ({n}, {k})")
    if k > n:
        raise ValueError(f"k = {k} exceeds n = {n}")


class WhitneyTriangle:
    """Rows of w or W, extended on demand and memoized.

    Rows are appended under a lock; a row, once stored, never changes.
    """

    def __init__(self, kind: Kind):
        if kind not in ("first", "second"):
            raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
        self.kind = kind
        self._rows: list[tuple[MPoly, ...]] = [(MPoly.const(1),)]
        self._lock = threading.Lock()

    def reset(self) -> None:
        with self._lock:
            self._rows = [(MPoly.const(1),)]

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def _next_row(self, prev: tuple[MPoly, ...]) -> tuple[MPoly, ...]:
        n = len(prev)
        row = []
        for k in range(n + 1):
            up = prev[k] if k < n else MPoly()
            diag = prev[k - 1] if k > 0 else MPoly()
            if self.kind == "second":
                factor = q * k + r
                row.append(diag + factor * up)
            else:
                factor = r + q * (n - 1)
                row.append(diag - factor * up)
        return tuple(row)

    def extend(self, n: int) -> None:
        if n <= self.max_n:
            return
        with self._lock:
            while self.max_n < n:
                self._rows.append(self._next_row(self._rows[-1]))

    def row(self, n: int) -> tuple[MPoly, ...]:
        if n < 0:
            raise ValueError(f"row index must be non-negative, got {n}")
        self.extend(n)
        return self._rows[n]

    def __call__(self, n: int, k: int) -> MPoly:
        _check_indices(n, k)
        return self.row(n)[k]


FIRST = WhitneyTriangle("first")
SECOND = WhitneyTriangle("second")


def triangle(kind: Kind) -> WhitneyTriangle:
    if kind == "first":
        return FIRST
    if kind == "second":
        return SECOND
    raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")


def whitney_first(n: int, k: int) -> MPoly:
    return FIRST(n, k)


def whitney_second(n: int, k: int) -> MPoly:
    return SECOND(n, k)


def whitney_second_explicit(n: int, k: int, q_val: RationalLike, r_val: RationalLike) -> Fraction:
    """W(n, k) at numeric q != 0, r by the alternating binomial sum."""
    _check_indices(n, k)
    qv, rv = as_rational(q_val), as_rational(r_val)
    if qv == 0:
        raise ZeroDivisionError("the explicit formula divides by q^k; q must be nonzero")
    total = sum(
        (-1) ** (k - j) * binomial(k, j) * (rv + j * qv) ** n for j in range(k + 1)
    )
    return Fraction(total) / (qv**k * factorial(k))


def falling_factorial(var: MPoly, n: int, step: MPoly | int = 1) -> MPoly:
    """var (var - step) ... (var - (n-1) step)."""
    out = MPoly.const(1)
    for i in range(n):
        out = out * (var - MPoly.coerce(step) * i)
    return out


def _solve_triangular(target: MPoly, basis: list[MPoly]) -> list[MPoly]:
    """Write ``target`` (a polynomial in x) as sum_k c_k basis[k].

    basis[k] must have x-degree k with leading x-coefficient q^k.
    """
    n = len(basis) - 1
    coeffs: list[MPoly] = [MPoly()] * (n + 1)
    rest = target
    for k in range(n, -1, -1):
        lead = rest.coefficient_of("x", k)
        c = lead.exact_div_monomial("q", k)
        coeffs[k] = c
        rest = rest - c * basis[k]
    if not rest.is_zero():
        raise ArithmeticError(f"basis change left a remainder {rest}")
    return coeffs


def whitney_definitional_oracle(kind: Kind, n: int) -> list[MPoly]:
    """Row n computed by basis conversion in Q[q, r, x], without the recurrence."""
    if n < 0:
        raise ValueError(f"row index must be non-negative, got {n}")
    if kind == "second":
        target = (q * x + r) ** n
        basis = [q**k * falling_factorial(x, k) for k in range(n + 1)]
        return _solve_triangular(target, basis)
    if kind == "first":
        target = q**n * falling_factorial(x, n)
        basis = [(q * x + r) ** k for k in range(n + 1)]
        return _solve_triangular(target, basis)
    raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")


def whitney_egf_series(k: int, order: int) -> TruncSeries:
    """e^{rt} ((e^{qt} - 1)/q)^k / k!, truncated at t^order."""
    if k < 0 or order < 0:
        raise ValueError(f"need k >= 0 and order >= 0, got k={k}, order={order}")
    u = exp_minus_one_over("q", order)
    series = series_exp_linear(r, order)
    for _ in range(k):
        series = series * u
    return series.scale(MPoly.const(Fraction(1, factorial(k))))


def whitney_egf_column(k: int, order: int) -> list[MPoly]:
    """n! [t^n] of the column-k generating function for n = 0..order."""
    return egf_coefficients(whitney_egf_series(k, order))


def whitney_egf_check(k: int, n_max: int) -> bool:
    column = whitney_egf_column(k, n_max)
    if any(not column[n].is_zero() for n in range(k)):
        return False
    return all(column[n] == whitney_second(n, k) for n in range(k, n_max + 1))


def whitney_translated(n: int, k: int) -> tuple[MPoly, MPoly]:
    """Both sides of W_{q,r+s}(n,k) = sum_j C(n,j) r^(n-j) W_{q,s}(j,k)."""
    _check_indices(n, k)
    lhs = whitney_second(n, k).substitute("r", r + s)
    rhs = MPoly()
    for j in range(k, n + 1):
        rhs = rhs + (r ** (n - j)).scale(binomial(n, j)) * whitney_second(j, k).rename("r", "s")
    return lhs, rhs


def whitney_translation(n: int, k: int) -> bool:
    lhs, rhs = whitney_translated(n, k)
    return lhs == rhs


def orthogonality_sums(n: int, k: int) -> tuple[MPoly, MPoly]:
    """sum_l w(n,l) W(l,k) and sum_l W(n,l) w(l,k)."""
    _check_indices(n, k)
    first = MPoly()
    second = MPoly()
    for l in range(k, n + 1):
        first = first + whitney_first(n, l) * whitney_second(l, k)
        second = second + whitney_second(n, l) * whitney_first(l, k)
    return first, second

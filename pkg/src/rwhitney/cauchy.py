"""Cauchy polynomials with a q parameter at z = r (first kind) and z = -r (second kind)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Literal

from .poly import MPoly, q, r, x
from .whitney import whitney_first, whitney_second

Kind = Literal["first", "second"]


@lru_cache(maxsize=None)
def cauchy_first(n: int) -> MPoly:
    """c_n^q(r) = sum_k w(n,k) / (k+1)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    total = MPoly()
    for k in range(n + 1):
        total = total + whitney_first(n, k).scale(Fraction(1, k + 1))
    return total


@lru_cache(maxsize=None)
def cauchy_second_neg(n: int) -> MPoly:
    """c-hat_n^q(-r) = sum_k (-1)^k w(n,k) / (k+1)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    total = MPoly()
    for k in range(n + 1):
        total = total + whitney_first(n, k).scale(Fraction((-1) ** k, k + 1))
    return total


def cauchy(kind: Kind, n: int) -> MPoly:
    if kind == "first":
        return cauchy_first(n)
    if kind == "second":
        return cauchy_second_neg(n)
    raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")


def cauchy_integral_oracle(kind: Kind, n: int) -> MPoly:
    """Integrate the generalized factorial over x in [0, 1] directly.

    first:  prod_{i<n} (x - r - i q)
    second: prod_{i<n} (-x - r - i q)
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if kind == "first":
        base = x - r
    elif kind == "second":
        base = -x - r
    else:
        raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
    product = MPoly.const(1)
    for i in range(n):
        product = product * (base - q * i)
    return product.integrate_x_unit()


def cauchy_W_convolutions(n: int) -> tuple[MPoly, MPoly]:
    """sum_k W(n,k) c_k^q(r) and sum_k W(n,k) c-hat_k^q(-r)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    first = MPoly()
    second = MPoly()
    for k in range(n + 1):
        w = whitney_second(n, k)
        first = first + w * cauchy_first(k)
        second = second + w * cauchy_second_neg(k)
    return first, second


def cauchy_W_convolution_check(n: int) -> bool:
    first, second = cauchy_W_convolutions(n)
    return first == Fraction(1, n + 1) and second == Fraction((-1) ** n, n + 1)

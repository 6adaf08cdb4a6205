"""Exact rational scalars.

The scalar type is :class:`fractions.Fraction`, which already keeps values in
reduced form with a positive denominator.  This module adds the canonical
``p/q`` text form used by every emitter, plus the integer combinatorial
helpers.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: nothing in the computation path is inexact.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction | int) -> str:
    """Canonical text: ``"p/q"`` with q > 0, or ``"p"`` when q == 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial with negative n")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def to_decimal_string(value: Fraction, digits: int = 12) -> str:
    """Display-only decimal approximation, rounded half-even at ``digits`` places."""
    scale = 10 ** digits
    scaled = round(value * scale)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), scale)
    return f"{sign}{whole}.{frac:0{digits}d}"

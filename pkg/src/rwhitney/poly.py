"""Sparse multivariate polynomials over Q in the fixed alphabet q, r, s, z, x.

A monomial is stored as one packed integer: each exponent takes a 12-bit
field, with ``x`` in the most significant field and ``q`` in the least.
Multiplying monomials is then integer addition, and comparing packed keys
of equal total degree is lexicographic comparison with x > z > s > r > q.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from . import kernels
from .rational import RationalLike, as_rational, format_rational, parse_rational

VARIABLES = ("q", "r", "s", "z", "x")
_INDEX = {v: i for i, v in enumerate(VARIABLES)}
_BITS = 12
_FIELD = (1 << _BITS) - 1
MAX_EXPONENT = _FIELD


def _pack(exps: Iterable[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} outside 0..{MAX_EXPONENT}")
        key |= e << (_BITS * i)
    return key


def _unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * i)) & _FIELD for i in range(len(VARIABLES)))


def _exp(key: int, i: int) -> int:
    return (key >> (_BITS * i)) & _FIELD


def _degree(key: int) -> int:
    return sum(_unpack(key))


def _order_key(key: int) -> tuple[int, int]:
    return (_degree(key), key)


def _var_index(var: str) -> int:
    try:
        return _INDEX[var]
    except KeyError:
        raise ValueError(f"unknown indeterminate {var!r}; expected one of {VARIABLES}") from None


PolyLike = Union["MPoly", int, Fraction]


class MPoly:
    """Immutable sparse polynomial in Q[q, r, s, z, x].

    Stored as integer numerators over one positive common denominator, with
    gcd(denominator, all numerators) == 1 and no zero numerator.  That form
    is unique, so ``==`` is mathematical equality.
    """

    __slots__ = ("_nums", "_den", "_hash", "_maxexp")

    def __init__(self, terms: Mapping[int, RationalLike] | None = None):
        """Build from a mapping of packed monomial keys to rational coefficients."""
        terms = {k: as_rational(c) for k, c in (terms or {}).items()}
        den = math.lcm(*(c.denominator for c in terms.values())) if terms else 1
        nums = {k: c.numerator * (den // c.denominator) for k, c in terms.items() if c}
        self._set(nums, den)

    def _set(self, nums: dict[int, int], den: int) -> None:
        if not nums:
            den = 1
        else:
            g = math.gcd(den, *nums.values())
            if g != 1:
                nums = {k: v // g for k, v in nums.items()}
                den //= g
        self._nums = nums
        self._den = den
        self._hash = None
        self._maxexp = None

    @classmethod
    def _make(cls, nums: dict[int, int], den: int) -> MPoly:
        # nums must already be free of zero entries
        obj = object.__new__(cls)
        obj._set(nums, den)
        return obj

    # -- construction -------------------------------------------------------

    @classmethod
    def const(cls, c: RationalLike) -> MPoly:
        c = as_rational(c)
        return cls._make({0: c.numerator} if c else {}, c.denominator)

    @classmethod
    def var(cls, name: str) -> MPoly:
        return cls._make({1 << (_BITS * _var_index(name)): 1}, 1)

    @classmethod
    def monomial(cls, coefficient: RationalLike = 1, **exponents: int) -> MPoly:
        exps = [0] * len(VARIABLES)
        for name, e in exponents.items():
            exps[_var_index(name)] = e
        return cls({_pack(exps): coefficient})

    @classmethod
    def coerce(cls, value: PolyLike) -> MPoly:
        if isinstance(value, MPoly):
            return value
        return cls.const(value)

    @classmethod
    def parse(cls, text: str) -> MPoly:
        return _Parser(text).parse()

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._nums

    def is_constant(self) -> bool:
        return not self._nums or (len(self._nums) == 1 and 0 in self._nums)

    def constant_term(self) -> Fraction:
        return Fraction(self._nums.get(0, 0), self._den)

    def to_rational(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not a constant")
        return self.constant_term()

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """(exponent vector, coefficient) pairs in canonical order."""
        keys = sorted(self._nums, key=_order_key, reverse=True)
        return [(_unpack(k), Fraction(self._nums[k], self._den)) for k in keys]

    def __len__(self) -> int:
        return len(self._nums)

    def _max_exponents(self) -> tuple[int, ...]:
        if self._maxexp is None:
            m = [0] * len(VARIABLES)
            for k in self._nums:
                for i in range(len(VARIABLES)):
                    e = (k >> (_BITS * i)) & _FIELD
                    if e > m[i]:
                        m[i] = e
            self._maxexp = tuple(m)
        return self._maxexp

    def degree_in(self, var: str) -> int:
        return self._max_exponents()[_var_index(var)]

    def total_degree(self) -> int:
        return max((_degree(k) for k in self._nums), default=0)

    def variables(self) -> set[str]:
        return {v for v, e in zip(VARIABLES, self._max_exponents()) if e}

    def coefficient_of(self, var: str, power: int) -> MPoly:
        """Coefficient of ``var**power``, as a polynomial in the other variables."""
        i = _var_index(var)
        shift = power << (_BITS * i)
        return MPoly._make(
            {k - shift: c for k, c in self._nums.items() if _exp(k, i) == power}, self._den
        )

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: PolyLike) -> MPoly:
        if not isinstance(other, MPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = MPoly.const(other)
        if not other._nums:
            return self
        if not self._nums:
            return other
        da, db = self._den, other._den
        den = da if da == db else math.lcm(da, db)
        nums = kernels.add_terms(self._nums, den // da, other._nums, den // db)
        return MPoly._make(nums, den)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly._make({k: -c for k, c in self._nums.items()}, self._den)

    def __sub__(self, other: PolyLike) -> MPoly:
        if not isinstance(other, MPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = MPoly.const(other)
        if not other._nums:
            return self
        da, db = self._den, other._den
        den = da if da == db else math.lcm(da, db)
        nums = kernels.add_terms(self._nums, den // da, other._nums, -(den // db))
        return MPoly._make(nums, den)

    def __rsub__(self, other: PolyLike) -> MPoly:
        return MPoly.coerce(other) - self

    def scale(self, c: RationalLike) -> MPoly:
        c = as_rational(c)
        if not c:
            return MPoly()
        p = c.numerator
        return MPoly._make({k: v * p for k, v in self._nums.items()}, self._den * c.denominator)

    def __mul__(self, other: PolyLike) -> MPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        if not self._nums or not other._nums:
            return MPoly()
        ma, mb = self._max_exponents(), other._max_exponents()
        if any(a + b > MAX_EXPONENT for a, b in zip(ma, mb)):
            raise OverflowError("product exponent exceeds the packed field width")
        return MPoly._make(kernels.mul_terms(self._nums, other._nums), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> MPoly:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.scale(1 / as_rational(other))

    def __pow__(self, e: int) -> MPoly:
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div_monomial(self, var: str, power: int = 1) -> MPoly:
        """Divide by ``var**power``; every term must be divisible."""
        i = _var_index(var)
        shift = power << (_BITS * i)
        out = {}
        for k, c in self._nums.items():
            if _exp(k, i) < power:
                raise ValueError(f"{self} is not divisible by {var}^{power}")
            out[k - shift] = c
        return MPoly._make(out, self._den)

    # -- substitution -------------------------------------------------------

    def evaluate(self, point: Mapping[str, RationalLike]) -> MPoly:
        """Substitute rational values for some indeterminates."""
        nums, den = self._nums, self._den
        for var, val in point.items():
            i = _var_index(var)
            val = as_rational(val)
            top = self._max_exponents()[i]
            if top == 0 or not nums:
                continue
            # p/q substituted: multiply through by q^top to stay integral
            p, qd = val.numerator, val.denominator
            ppow = [p**e for e in range(top + 1)]
            qpow = [qd**e for e in range(top + 1)]
            out: dict[int, int] = {}
            for k, c in nums.items():
                e = _exp(k, i)
                k2 = k - (e << (_BITS * i))
                out[k2] = out.get(k2, 0) + c * ppow[e] * qpow[top - e]
            nums = {k: c for k, c in out.items() if c}
            den = den * qpow[top]
        return MPoly._make(nums, den) if nums is not self._nums else self

    def substitute(self, var: str, expr: PolyLike) -> MPoly:
        """Compose: replace ``var`` by the polynomial ``expr``."""
        i = _var_index(var)
        expr = MPoly.coerce(expr)
        by_power: dict[int, dict[int, int]] = {}
        for k, c in self._nums.items():
            e = _exp(k, i)
            by_power.setdefault(e, {})[k - (e << (_BITS * i))] = c
        result = MPoly()
        power = MPoly.const(1)
        for e in range(max(by_power, default=-1) + 1):
            if e:
                power = power * expr
            part = by_power.get(e)
            if part:
                result = result + MPoly._make(part, self._den) * power
        return result

    def rename(self, old: str, new: str) -> MPoly:
        return self.substitute(old, MPoly.var(new))

    def integrate_x_unit(self) -> MPoly:
        """Definite integral over x in [0, 1], term by term."""
        i = _var_index("x")
        top = self._max_exponents()[i]
        lcm = math.lcm(*range(1, top + 2))
        out: dict[int, int] = {}
        for k, c in self._nums.items():
            e = _exp(k, i)
            k2 = k - (e << (_BITS * i))
            out[k2] = out.get(k2, 0) + c * (lcm // (e + 1))
        return MPoly._make({k: c for k, c in out.items() if c}, self._den * lcm)

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if isinstance(other, MPoly):
            return self._den == other._den and self._nums == other._nums
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._den, frozenset(self._nums.items())))
        return self._hash

    # -- text / JSON --------------------------------------------------------

    def __str__(self) -> str:
        if not self._nums:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(VARIABLES, exps) if e
            )
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(exps), "coefficient": format_rational(c)}
            for exps, c in self.terms()
        ]

    @classmethod
    def from_json(cls, records: list[dict]) -> MPoly:
        out = MPoly()
        for rec in records:
            exps = rec["exponents"]
            if len(exps) != len(VARIABLES):
                raise ValueError(f"exponent vector must have {len(VARIABLES)} entries")
            out = out + cls({_pack(exps): parse_rational(rec["coefficient"])})
        return out


def poly_sum(items: Iterable[MPoly]) -> MPoly:
    total = MPoly()
    for p in items:
        total = total + p
    return total


q = MPoly.var("q")
r = MPoly.var("r")
s = MPoly.var("s")
z = MPoly.var("z")
x = MPoly.var("x")


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([qrszx])|(\*\*|[-+*/^()]))")


class _Parser:
    """Recursive-descent parser for the canonical text form.

    Accepts ``+ - * / ^ **``, parentheses, integer literals, the five
    variables and implicit multiplication (``3q`` or ``2(q+r)``).  Division
    is allowed only by constants.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text: str) -> list[tuple[str, str]]:
        toks = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                raise ValueError(f"unexpected character at {pos} in {text!r}")
            if m.group(1):
                toks.append(("num", m.group(1)))
            elif m.group(2):
                toks.append(("var", m.group(2)))
            else:
                op = m.group(3)
                toks.append(("op", "^" if op == "**" else op))
            pos = m.end()
        return toks

    def _peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self) -> tuple[str, str]:
        tok = self._peek()
        if tok is None:
            raise ValueError(f"unexpected end of input in {self.text!r}")
        self.pos += 1
        return tok

    def _expect(self, op: str) -> None:
        tok = self._take()
        if tok != ("op", op):
            raise ValueError(f"expected {op!r}, got {tok[1]!r} in {self.text!r}")

    def parse(self) -> MPoly:
        if not self.tokens:
            raise ValueError("empty polynomial text")
        value = self._expr()
        if self._peek() is not None:
            raise ValueError(f"trailing input {self._peek()[1]!r} in {self.text!r}")
        return value

    def _expr(self) -> MPoly:
        value = self._term()
        while self._peek() in (("op", "+"), ("op", "-")):
            op = self._take()[1]
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> MPoly:
        value = self._unary()
        while True:
            tok = self._peek()
            if tok == ("op", "*"):
                self._take()
                value = value * self._unary()
            elif tok == ("op", "/"):
                self._take()
                den = self._unary()
                if not den.is_constant() or den.is_zero():
                    raise ValueError(f"division by a non-constant or zero in {self.text!r}")
                value = value / den.to_rational()
            elif tok is not None and (tok[0] in ("num", "var") or tok == ("op", "(")):
                value = value * self._power()
            else:
                return value

    def _unary(self) -> MPoly:
        if self._peek() == ("op", "-"):
            self._take()
            return -self._unary()
        if self._peek() == ("op", "+"):
            self._take()
            return self._unary()
        return self._power()

    def _power(self) -> MPoly:
        base = self._atom()
        if self._peek() == ("op", "^"):
            self._take()
            kind, val = self._take()
            if kind != "num":
                raise ValueError(f"exponent must be an integer literal in {self.text!r}")
            base = base ** int(val)
        return base

    def _atom(self) -> MPoly:
        kind, val = self._take()
        if kind == "num":
            return MPoly.const(int(val))
        if kind == "var":
            return MPoly.var(val)
        if val == "(":
            inner = self._expr()
            self._expect(")")
            return inner
        raise ValueError(f"unexpected {val!r} in {self.text!r}")

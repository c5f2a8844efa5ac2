"""Exact arithmetic in Q[w]/(w^2 - D).

With D = q the generator w plays the role of sqrt(q); with D = -q it plays
i*sqrt(q).  Every closed-form count is evaluated here and must come out as a
rational integer with no w-part; :func:`assert_integer` is the only way out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import NonIntegerResult, TagMismatch


@dataclass(frozen=True)
class RingTag:
    D: int

    def __post_init__(self):
        if self.D == 0:
            raise ValueError("D must be nonzero")


class QuadExact:
    """The value ``a + b*w`` with rational a, b and ``w**2 == tag.D``."""

    __slots__ = ("a", "b", "tag")

    def __init__(self, a=0, b=0, tag: RingTag | int = 1):
        if not isinstance(tag, RingTag):
            tag = RingTag(int(tag))
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.tag = tag

    @classmethod
    def omega(cls, D: int) -> "QuadExact":
        return cls(0, 1, D)

    @property
    def D(self) -> int:
        return self.tag.D

    def _coerce(self, y) -> "QuadExact":
        if isinstance(y, QuadExact):
            if y.tag != self.tag:
                raise TagMismatch(f"w^2={self.D} vs w^2={y.D}")
            return y
        if isinstance(y, (int, Rational)):
            return QuadExact(y, 0, self.tag)
        return NotImplemented

    def __add__(self, y):
        y = self._coerce(y)
        if y is NotImplemented:
            return y
        return QuadExact(self.a + y.a, self.b + y.b, self.tag)

    __radd__ = __add__

    def __sub__(self, y):
        y = self._coerce(y)
        if y is NotImplemented:
            return y
        return QuadExact(self.a - y.a, self.b - y.b, self.tag)

    def __rsub__(self, y):
        return (-self) + y

    def __neg__(self):
        return QuadExact(-self.a, -self.b, self.tag)

    def __mul__(self, y):
        if isinstance(y, (int, Rational)):
            return QuadExact(self.a * y, self.b * y, self.tag)
        y = self._coerce(y)
        if y is NotImplemented:
            return y
        return QuadExact(
            self.a * y.a + self.b * y.b * self.D,
            self.a * y.b + self.b * y.a,
            self.tag,
        )

    __rmul__ = __mul__

    def __truediv__(self, y):
        if isinstance(y, (int, Rational)):
            return QuadExact(self.a / y, self.b / y, self.tag)
        return NotImplemented

    def __pow__(self, n: int):
        return power(self, n)

    def __eq__(self, y):
        if isinstance(y, QuadExact):
            return (self.a, self.b, self.tag) == (y.a, y.b, y.tag)
        if isinstance(y, (int, Rational)):
            return self.b == 0 and self.a == y
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.tag))

    def conj(self) -> "QuadExact":
        return QuadExact(self.a, -self.b, self.tag)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.D

    def __complex__(self):
        w = math.sqrt(abs(self.D))
        if self.D > 0:
            return complex(float(self.a) + float(self.b) * w)
        return complex(float(self.a), float(self.b) * w)

    def __repr__(self):
        return f"QuadExact({self.a}, {self.b}, D={self.D})"

    def __str__(self):
        return format_quad(self)


Scalar = Union[int, Fraction, QuadExact]


def format_quad(x: Scalar) -> str:
    """Diagnostic text ``a + b·ω [ω²=D]``; zero parts are dropped."""
    if not isinstance(x, QuadExact):
        return str(x)
    a, b = x.a, x.b
    if b == 0:
        body = str(a)
    else:
        mag = abs(b)
        coef = "ω" if mag == 1 else f"{mag}·ω"
        if a == 0:
            body = coef if b > 0 else f"-{coef}"
        else:
            body = f"{a} {'+' if b > 0 else '-'} {coef}"
    return f"{body} [ω²={x.D}]"


def add(x: QuadExact, y: Scalar) -> QuadExact:
    return x + y


def sub(x: QuadExact, y: Scalar) -> QuadExact:
    return x - y


def mul(x: QuadExact, y: Scalar) -> QuadExact:
    return x * y


def scalar_mul(x: QuadExact, c) -> QuadExact:
    return x * Fraction(c)


def conj(x: Scalar) -> Scalar:
    return x.conj() if isinstance(x, QuadExact) else x


def power(x, n: int):
    """Exact n-th power by square-and-multiply; works for rationals too."""
    if n < 0:
        raise ValueError("negative exponent")
    result = QuadExact(1, 0, x.tag) if isinstance(x, QuadExact) else Fraction(1)
    base = x
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def falling_factorial(x, k: int):
    """x (x-1) ... (x-k+1); the empty product is 1."""
    result = QuadExact(1, 0, x.tag) if isinstance(x, QuadExact) else Fraction(1)
    for j in range(k):
        result = result * (x - j)
    return result


def binomial_general(x, n: int):
    """Generalised binomial coefficient with a ring-valued upper argument."""
    if n < 0:
        raise ValueError("negative lower index")
    return falling_factorial(x, n) / math.factorial(n)


def assert_integer(x: Scalar, context: str = "") -> int:
    """Return x as an int, or raise NonIntegerResult."""
    if isinstance(x, int):
        return x
    if isinstance(x, QuadExact):
        if x.b != 0 or x.a.denominator != 1:
            raise NonIntegerResult(x, context)
        return x.a.numerator
    x = Fraction(x)
    if x.denominator != 1:
        raise NonIntegerResult(x, context)
    return x.numerator

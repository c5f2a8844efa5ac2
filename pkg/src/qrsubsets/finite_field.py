"""Finite fields F_{p^s} of odd characteristic.

Elements are coefficient tuples ``(c0, c1, ..., c_{s-1})`` over F_p, constant
term first, reduced modulo a monic irreducible polynomial of degree s.  The
modulus is stored the same way with its leading 1 included.

Ordering of elements everywhere (enumeration, CLI tables, oracle iteration)
is plain lexicographic order on the coefficient tuple, so ``c0`` is the most
significant coordinate.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np
from sympy import isprime

from .errors import (
    CapExceeded,
    DivisionByZero,
    EvenCharacteristic,
    FieldError,
    NotPrime,
    ReducibleModulus,
)

ENUMERATION_CAP = 10**6
TABLE_CAP = 2500  # largest q for which dense addition tables are built


# -- polynomials over F_p as coefficient lists, constant term first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    r = _trim([c % p for c in a])
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for j in range(dm + 1):
            r[shift + j] = (r[shift + j] - lead * m[j]) % p
        _trim(r)
    return r


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    s = len(m) - 1
    if s <= 1:
        return True
    for d in range(1, s // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(m, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Parameters of F_q, q = p**s.  Build through :func:`build_field`."""

    p: int
    s: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def half(self) -> int:
        """Number of nonzero squares, (q - 1) / 2."""
        return (self.q - 1) // 2

    def element(self, value) -> "FieldElement":
        """Coerce an int, coefficient sequence or element into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return embed_int(value, self)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.s:
            raise FieldError(f"expected {self.s} coefficients, got {len(coeffs)}")
        return FieldElement(coeffs, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement((0,) * self.s, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement((1,) + (0,) * (self.s - 1), self)

    def __str__(self):
        if self.s == 1:
            return f"F_{self.p}"
        return f"F_{self.q} = F_{self.p}[t]/({format_poly(self.modulus)})"


def format_poly(coeffs: Sequence[int], var: str = "t") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if i == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) or "0"


def build_field(p: int, s: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validate parameters and return the field F_{p^s}.

    Without an explicit modulus the lexicographically smallest monic
    irreducible polynomial of degree s is chosen, so construction is
    reproducible.
    """
    p, s = int(p), int(s)
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if p < 2 or not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if s < 1:
        raise FieldError("extension degree must be >= 1")
    if modulus is None:
        if s == 1:
            return FieldSpec(p, 1, (0, 1))
        for low in itertools.product(range(p), repeat=s):
            m = low + (1,)
            if _is_irreducible(m, p):
                return FieldSpec(p, s, m)
        raise AssertionError("unreachable: irreducibles exist in every degree")
    m = tuple(int(c) % p for c in modulus)
    if len(m) != s + 1 or m[-1] != 1:
        raise FieldError(f"modulus must be monic of degree {s}")
    if not _is_irreducible(m, p):
        raise ReducibleModulus(f"{format_poly(m)} is reducible over F_{p}")
    return FieldSpec(p, s, m)


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]
    field: FieldSpec = field(repr=False)

    def _other(self, y) -> "FieldElement":
        if isinstance(y, FieldElement):
            if y.field != self.field:
                raise FieldError("operands belong to different fields")
            return y
        if isinstance(y, int):
            return embed_int(y, self.field)
        return NotImplemented

    def __add__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        p = self.field.p
        return FieldElement(tuple((a + b) % p for a, b in zip(self.coeffs, y.coeffs)), self.field)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(tuple(-a % p for a in self.coeffs), self.field)

    def __sub__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return self + (-y)

    def __rsub__(self, y):
        return (-self) + y

    def __mul__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        F = self.field
        if F.s == 1:
            return FieldElement(((self.coeffs[0] * y.coeffs[0]) % F.p,), F)
        prod = [0] * (2 * F.s - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(y.coeffs):
                    prod[i + j] += a * b
        r = _poly_mod(prod, F.modulus, F.p)
        return FieldElement(tuple(r) + (0,) * (F.s - len(r)), F)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return power(self, e)

    def __truediv__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return self * inv(y)

    def __bool__(self):
        return any(self.coeffs)

    def __str__(self):
        return format_element(self)


# -- functional surface ------------------------------------------------------

def add(x: FieldElement, y: FieldElement, F: FieldSpec | None = None) -> FieldElement:
    return x + y


def sub(x: FieldElement, y: FieldElement, F: FieldSpec | None = None) -> FieldElement:
    return x - y


def mul(x: FieldElement, y: FieldElement, F: FieldSpec | None = None) -> FieldElement:
    return x * y


def neg(x: FieldElement, F: FieldSpec | None = None) -> FieldElement:
    return -x


def power(x: FieldElement, e: int, F: FieldSpec | None = None) -> FieldElement:
    """Square-and-multiply; 0**0 is 1."""
    if e < 0:
        return power(inv(x), -e)
    result = x.field.one
    base = x
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def inv(x: FieldElement, F: FieldSpec | None = None) -> FieldElement:
    if not x:
        raise DivisionByZero("zero has no inverse")
    return power(x, x.field.q - 2)


def trace(x: FieldElement, F: FieldSpec | None = None) -> int:
    """Absolute trace to F_p, returned as an integer in [0, p)."""
    F = x.field
    total = x
    y = x
    for _ in range(F.s - 1):
        y = power(y, F.p)
        total = total + y
    assert not any(total.coeffs[1:]), "trace left the prime subfield"
    return total.coeffs[0]


def quadratic_character(x: FieldElement, F: FieldSpec | None = None) -> int:
    """Quadratic character with chi(0) = 0, via Euler's criterion."""
    if not x:
        return 0
    r = power(x, (x.field.q - 1) // 2)
    return 1 if r == x.field.one else -1


def embed_int(n: int, F: FieldSpec) -> FieldElement:
    return FieldElement((n % F.p,) + (0,) * (F.s - 1), F)


def enumerate_elements(F: FieldSpec, cap: int = ENUMERATION_CAP) -> list[FieldElement]:
    if F.q > cap:
        raise CapExceeded(f"q = {F.q} exceeds enumeration cap {cap}")
    return [FieldElement(c, F) for c in itertools.product(range(F.p), repeat=F.s)]


def enumerate_quadratic_residues(F: FieldSpec, cap: int = ENUMERATION_CAP) -> list[FieldElement]:
    """The subgroup H of nonzero squares, in element order."""
    elements = enumerate_elements(F, cap)
    squares = {x * x for x in elements if x}
    return [x for x in elements if x in squares]


def iter_nonzero(F: FieldSpec, cap: int = ENUMERATION_CAP) -> Iterator[FieldElement]:
    return (x for x in enumerate_elements(F, cap) if x)


# -- text format -------------------------------------------------------------

def format_element(x: FieldElement) -> str:
    if x.field.s == 1:
        return str(x.coeffs[0])
    return ",".join(str(c) for c in x.coeffs)


def parse_element(text: str, F: FieldSpec) -> FieldElement:
    """Parse ``"5"`` (any s, via the prime subfield) or ``"c0,c1,..."``."""
    text = text.strip()
    try:
        if "," in text:
            return F.element([int(c) for c in text.split(",")])
        return embed_int(int(text), F)
    except ValueError as exc:
        raise FieldError(f"cannot parse field element {text!r}: {exc}") from None


# -- dense lookup tables for brute-force code -------------------------------

@dataclass(frozen=True)
class FieldTables:
    """Index-based view of a small field.

    Element ``i`` is ``elements[i]`` in the canonical order; index 0 is zero.
    """

    elements: tuple[FieldElement, ...]
    index: dict
    add: np.ndarray  # add[i, j] = index of elements[i] + elements[j]
    neg: np.ndarray
    square: np.ndarray  # square[i] = index of elements[i]**2
    chi: np.ndarray  # quadratic character of elements[i]

    def idx(self, x: FieldElement) -> int:
        return self.index[x.coeffs]

    def scale(self, a: FieldElement) -> np.ndarray:
        """scale(a)[i] = index of a * elements[i]."""
        return np.array([self.index[(a * x).coeffs] for x in self.elements], dtype=np.int64)


@functools.lru_cache(maxsize=32)
def field_tables(F: FieldSpec) -> FieldTables:
    if F.q > TABLE_CAP:
        raise CapExceeded(f"q = {F.q} too large for dense tables (cap {TABLE_CAP})")
    elements = tuple(enumerate_elements(F))
    index = {x.coeffs: i for i, x in enumerate(elements)}
    coeffs = np.array([x.coeffs for x in elements], dtype=np.int64)
    # index of a coefficient tuple: c0 is the most significant base-p digit
    weights = F.p ** np.arange(F.s - 1, -1, -1, dtype=np.int64)
    summed = (coeffs[:, None, :] + coeffs[None, :, :]) % F.p
    add_table = summed @ weights
    neg_table = ((-coeffs) % F.p) @ weights
    square = np.array([index[(x * x).coeffs] for x in elements], dtype=np.int64)
    chi = np.zeros(F.q, dtype=np.int64)
    nonzero_squares = set(square[1:].tolist())
    for i in range(1, F.q):
        chi[i] = 1 if i in nonzero_squares else -1
    return FieldTables(elements, index, add_table, neg_table, square, chi)

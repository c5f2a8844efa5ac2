"""Gauss sums and Jacobi-type sums for the trivial and quadratic characters.

Closed forms return exact values; the ``*_direct`` functions are brute-force
evaluators meant as test oracles.
"""

from __future__ import annotations

import cmath
import enum
import itertools
from math import comb, prod
from typing import Sequence

from .errors import CapExceeded
from .exact_ring import QuadExact
from .finite_field import (
    ENUMERATION_CAP,
    FieldElement,
    FieldSpec,
    enumerate_elements,
    field_tables,
    quadratic_character,
    trace,
)

JACOBI_CAP = 10**7


class CharSlot(enum.Enum):
    TRIVIAL = "trivial"
    QUADRATIC = "quadratic"


class JacobiVariant(enum.Enum):
    J = "J"
    JSTAR = "Jstar"
    J0 = "J0"
    J0STAR = "J0star"

    @property
    def target(self) -> int:
        return 0 if self in (JacobiVariant.J0, JacobiVariant.J0STAR) else 1

    @property
    def nonzero(self) -> bool:
        return self in (JacobiVariant.JSTAR, JacobiVariant.J0STAR)


def is_real_case(F: FieldSpec) -> bool:
    """True when sqrt(q) suffices (p = 1 mod 4 or s even), False when i*sqrt(q) is needed."""
    return F.p % 4 == 1 or F.s % 2 == 0


def gauss_closed(F: FieldSpec) -> tuple[QuadExact, str]:
    """G(chi) for the quadratic character, as +-w with w^2 = +-q."""
    sign = -1 if F.s % 2 == 0 else 1  # (-1)^(s-1)
    if F.p % 4 == 1:
        return QuadExact(0, sign, F.q), "p=1 mod 4"
    if F.s % 2 == 0:
        # i^s = (-1)^(s/2) is real
        return QuadExact(0, sign * (-1) ** (F.s // 2), F.q), "p=3 mod 4, s even"
    # i^s = i * (-1)^((s-1)/2); the i is absorbed into w
    return QuadExact(0, sign * (-1) ** ((F.s - 1) // 2), -F.q), "p=3 mod 4, s odd"


def gauss_direct(a: FieldElement, F: FieldSpec, cap: int = ENUMERATION_CAP) -> complex:
    """Numeric sum_t chi(t) zeta^Tr(a t) with zeta = exp(2 pi i / p)."""
    if F.q > cap:
        raise CapExceeded(f"q = {F.q} exceeds cap {cap}")
    zeta = [cmath.exp(2j * cmath.pi * r / F.p) for r in range(F.p)]
    total = 0j
    for t in enumerate_elements(F, cap):
        c = quadratic_character(t)
        if c:
            total += c * zeta[trace(a * t)]
    return total


def jacobi_quadratic_closed(e: int, F: FieldSpec) -> int:
    """J(chi, ..., chi) with e quadratic slots."""
    if e < 1:
        raise ValueError("e must be >= 1")
    q = F.q
    if is_real_case(F):
        return q ** ((e - 1) // 2) if e % 2 else -(q ** (e // 2 - 1))
    return (-q) ** ((e - 1) // 2) if e % 2 else (-q) ** (e // 2 - 1)


def j0_quadratic_closed(e: int, F: FieldSpec) -> int:
    """J_0(chi, ..., chi) with e quadratic slots; zero for odd e."""
    if e < 1:
        raise ValueError("e must be >= 1")
    if e % 2:
        return 0
    q = F.q
    if is_real_case(F):
        return (q - 1) * q ** (e // 2 - 1)
    return -(q - 1) * (-q) ** (e // 2 - 1)


def _char_value(slot: CharSlot, chi: int) -> int:
    # trivial character is 1 everywhere, including at 0
    return 1 if slot is CharSlot.TRIVIAL else chi


def jacobi_direct(
    slots: Sequence[CharSlot],
    variant: JacobiVariant,
    F: FieldSpec,
    cap: int = JACOBI_CAP,
) -> int:
    """Sum over the hyperplane y_1 + ... + y_n = target by brute force.

    The first n-1 coordinates are enumerated and the last one is solved for.
    """
    slots = [CharSlot(s) for s in slots]
    variant = JacobiVariant(variant)
    n = len(slots)
    if n < 1:
        raise ValueError("need at least one slot")
    if F.q ** (n - 1) > cap:
        raise CapExceeded(f"q^(n-1) = {F.q ** (n - 1)} exceeds cap {cap}")
    T = field_tables(F)
    chi = T.chi.tolist()
    add = T.add.tolist()
    neg = T.neg.tolist()
    target = 0 if variant.target == 0 else T.idx(F.one)
    values = [[_char_value(slot, chi[i]) for i in range(F.q)] for slot in slots]
    lo = 1 if variant.nonzero else 0
    total = 0
    for head in itertools.product(range(lo, F.q), repeat=n - 1):
        partial = 0
        weight = 1
        for slot_vals, y in zip(values, head):
            partial = add[partial][y]
            weight *= slot_vals[y]
            if not weight:
                break
        if not weight:
            continue
        last = add[target][neg[partial]]
        if variant.nonzero and last == 0:
            continue
        total += weight * values[-1][last]
    return total


def prop22_specialize(slots: Sequence[CharSlot], variant: JacobiVariant, F: FieldSpec) -> int:
    """Closed form of the Jacobi-type sums for a mix of trivial and quadratic slots.

    Slot order is irrelevant; only the number e of trivial slots matters.
    """
    slots = [CharSlot(s) for s in slots]
    variant = JacobiVariant(variant)
    n = len(slots)
    if n < 1:
        raise ValueError("need at least one slot")
    e = sum(s is CharSlot.TRIVIAL for s in slots)
    q = F.q
    if variant is JacobiVariant.J:
        if e == n:
            return q ** (n - 1)
        return 0 if e else jacobi_quadratic_closed(n, F)
    if variant is JacobiVariant.J0:
        if e == n:
            return q ** (n - 1)
        return 0 if e else j0_quadratic_closed(n, F)
    if variant is JacobiVariant.JSTAR:
        if e == n:
            return ((q - 1) ** n - (-1) ** n) // q
        return (-1) ** e * jacobi_quadratic_closed(n - e, F)
    if e == n:
        return ((q - 1) ** n + (q - 1) * (-1) ** n) // q
    return (-1) ** e * j0_quadratic_closed(n - e, F)


def elementary_symmetric_char_sum(
    a: Sequence[FieldElement], e: int, F: FieldSpec | None = None, method: str = "binomial"
) -> int:
    """sum over e-subsets {i_1 < ... < i_e} of chi(a_i1 ... a_ie).

    ``method="direct"`` enumerates subsets; ``method="binomial"`` uses only
    m, the number of a_i that are squares.
    """
    n = len(a)
    if not 1 <= e <= n:
        raise ValueError("need 1 <= e <= len(a)")
    chis = [quadratic_character(x) for x in a]
    if 0 in chis:
        raise ValueError("all a_i must be nonzero")
    if method == "direct":
        return sum(prod(sub) for sub in itertools.combinations(chis, e))
    if method != "binomial":
        raise ValueError(f"unknown method {method!r}")
    m = chis.count(1)
    return (-1) ** e * sum((-1) ** i * comb(m, i) * _binom(n - m, e - i) for i in range(m + 1))


def _binom(n: int, k: int) -> int:
    return comb(n, k) if k >= 0 else 0

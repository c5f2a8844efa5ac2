"""Closed-form counts for diagonal quadratic equations and subset sums of squares.

Three layers, each built on the previous one:

* :func:`n_star` -- solutions of a_1 x_1^2 + ... + a_n x_n^2 = b with every
  x_i nonzero;
* :func:`n_tilde_star` -- solutions of x_1^2 + ... + x_k^2 = b with nonzero,
  pairwise distinct x_i, obtained by sieving over cycle types of S_k;
* :func:`n_H` -- k-subsets of the quadratic residues summing to b, the same
  sieve applied with every cycle weight halved.

All of them evaluate in :class:`~qrsubsets.exact_ring.QuadExact` with
w^2 = q ("real" branch: p = 1 mod 4 or s even) or w^2 = -q ("imaginary"
branch: p = 3 mod 4 and s odd), then certify the result through
:func:`~qrsubsets.exact_ring.assert_integer`.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .charsums import is_real_case
from .errors import (
    ConsistencyError,
    KOutOfRange,
    NonIntegerResult,
    OddExtensionDegree,
    TagMismatch,
    ZeroCoefficient,
)
from .exact_ring import QuadExact, RingTag, assert_integer, binomial_general, format_quad
from .finite_field import FieldElement, FieldSpec, embed_int, quadratic_character


@dataclass(frozen=True)
class CountResult:
    value: int
    provenance: str

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        if isinstance(other, CountResult):
            return (self.value, self.provenance) == (other.value, other.provenance)
        return NotImplemented

    def __hash__(self):
        return hash(self.value)


def branch(F: FieldSpec) -> str:
    return "real" if is_real_case(F) else "imaginary"


def ring_tag(F: FieldSpec) -> RingTag:
    return RingTag(F.q if is_real_case(F) else -F.q)


def _certify(x, label: str) -> CountResult:
    value = assert_integer(x, label)
    if value < 0:
        raise NonIntegerResult(x, f"{label}: negative count")
    return CountResult(value, label)


# -- diagonal equations ------------------------------------------------------

def n_star(a: Sequence[FieldElement], b: FieldElement, F: FieldSpec) -> CountResult:
    """Number of (x_1..x_n) in (F_q^*)^n with sum a_i x_i^2 = b."""
    a = [F.element(x) for x in a]
    b = F.element(b)
    n = len(a)
    if n < 1:
        raise ValueError("need at least one coefficient")
    chis = [quadratic_character(x) for x in a]
    if 0 in chis:
        raise ZeroCoefficient("all coefficients must be nonzero")
    q = F.q
    real = is_real_case(F)
    w = QuadExact.omega(ring_tag(F).D)
    one = QuadExact(1, 0, w.tag)
    lo, hi = one - w, one + w
    main = Fraction((q - 1) ** n, q)
    if b:
        chi_b = quadratic_character(b)
        m = chis.count(chi_b)
        if real:
            term = lo ** (m + 1) * hi ** (n - m) + hi ** (m + 1) * lo ** (n - m)
        else:
            term = lo**m * hi ** (n - m + 1) + hi**m * lo ** (n - m + 1)
        value = main - term * Fraction((-1) ** n, 2 * q)
        label = "diagonal/nonzero-b"
    else:
        m = chis.count(1)
        term = lo**m * hi ** (n - m) + hi**m * lo ** (n - m)
        value = main + term * Fraction((-1) ** n * (q - 1), 2 * q)
        label = "diagonal/zero-b"
    return _certify(value, f"{label}/{branch(F)}")


# -- cycle types and the cycle-index polynomial ------------------------------

@dataclass(frozen=True)
class CycleType:
    """c[i-1] = number of cycles of length i of a permutation in S_k."""

    c: tuple[int, ...]

    def __post_init__(self):
        if any(x < 0 for x in self.c):
            raise ValueError("cycle counts must be nonnegative")

    @property
    def k(self) -> int:
        return sum(i * ci for i, ci in enumerate(self.c, start=1))

    @property
    def cycles(self) -> int:
        return sum(self.c)

    @property
    def count(self) -> int:
        """Number of permutations of this type, k! / prod(i^c_i c_i!)."""
        denom = 1
        for i, ci in enumerate(self.c, start=1):
            denom *= i**ci * math.factorial(ci)
        return math.factorial(self.k) // denom


def _partitions(k: int, largest: int) -> Iterator[list[int]]:
    # partitions of k with parts <= largest, smallest maximum part first
    if k == 0:
        yield []
        return
    for top in range(1, min(k, largest) + 1):
        for rest in _partitions(k - top, top):
            yield [top] + rest


def cycle_types(k: int) -> Iterator[CycleType]:
    """Every solution of sum i c_i = k exactly once, as a CycleType of length k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    for parts in _partitions(k, k):
        c = [0] * k
        for part in parts:
            c[part - 1] += 1
        yield CycleType(tuple(c))


def _unit(t: Sequence):
    for x in t:
        if isinstance(x, QuadExact):
            return QuadExact(1, 0, x.tag)
    return Fraction(1)


def c_k_generic(t: Sequence, method: str = "egf"):
    """C_k(t_1..t_k) = sum over cycle types of N(c) prod t_i^c_i.

    ``egf`` runs the coefficient recurrence of exp(sum t_i u^i / i),
    ``(n+1) f_{n+1} = sum_{i=1}^{n+1} t_i f_{n+1-i}``, and returns k! f_k.
    ``partition`` enumerates cycle types and is kept as a cross-check.
    """
    k = len(t)
    one = _unit(t)
    if method == "partition":
        total = one * 0
        for ct in cycle_types(k):
            term = one * ct.count
            for ti, ci in zip(t, ct.c):
                for _ in range(ci):
                    term = term * ti
            total = total + term
        return total
    if method != "egf":
        raise ValueError(f"unknown method {method!r}")
    f = [one]
    for n in range(k):
        acc = one * 0
        for i in range(1, n + 2):
            acc = acc + t[i - 1] * f[n + 1 - i]
        f.append(acc / (n + 1))
    return f[k] * math.factorial(k)


# -- the three-slot specialisation ------------------------------------------

@dataclass(frozen=True)
class SieveArgs:
    """Slot values for cycle lengths i: u if chi(i) = chi_b, v if chi(i) = -chi_b, w if p | i."""

    u: object
    v: object
    w: object
    chi_b: int = 1

    def __post_init__(self):
        if self.chi_b not in (1, -1):
            raise ValueError("chi_b must be +1 or -1")
        tags = {x.tag for x in (self.u, self.v, self.w) if isinstance(x, QuadExact)}
        if len(tags) > 1:
            raise TagMismatch("u, v, w must share one ring tag")


def slot_values(k: int, args: SieveArgs, F: FieldSpec) -> list:
    t = []
    for i in range(1, k + 1):
        if i % F.p == 0:
            t.append(args.w)
        elif quadratic_character(embed_int(i, F)) == args.chi_b:
            t.append(args.u)
        else:
            t.append(args.v)
    return t


def a_closed(k: int, u, w, p: int):
    """C_k with t_i = u for p not dividing i and t_i = w otherwise, in closed form.

    k! (-1)^k sum_i binom(-u, k - p i) binom((u - w)/p, i).
    """
    total = _unit([u, w]) * 0
    shifted = (u - w) / p
    for i in range(k // p + 1):
        total = total + binomial_general(-u, k - p * i) * binomial_general(shifted, i)
    return total * ((-1) ** k * math.factorial(k))


@functools.lru_cache(maxsize=4096)
def a_kb(k: int, args: SieveArgs, F: FieldSpec):
    """A_{k,b}(u, v, w); only chi(b) enters, through ``args.chi_b``.

    When u == v the closed two-argument form is evaluated as well and the
    two routes must agree.  Results are memoised: across all b only
    chi(b) changes, so a whole table costs two evaluations per k.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    value = c_k_generic(slot_values(k, args, F))
    if args.u == args.v:
        closed = a_closed(k, args.u, args.w, F.p)
        if closed != value:
            raise ConsistencyError(
                f"A_k closed form {format_quad(closed)} != generic {format_quad(value)}"
            )
    return value


def _conjugate_pair(F: FieldSpec, scale: Fraction):
    # (1 - w) * scale and (1 + w) * scale
    w = QuadExact.omega(ring_tag(F).D)
    return (1 - w) * scale, (1 + w) * scale


def n_tilde_star(k: int, b: FieldElement, F: FieldSpec) -> CountResult:
    """Number of (x_1..x_k) in (F_q^*)^k, pairwise distinct, with sum x_i^2 = b."""
    b = F.element(b)
    q = F.q
    if not 0 <= k <= q - 1:
        raise KOutOfRange(f"k must lie in [0, {q - 1}]")
    lo, hi = _conjugate_pair(F, Fraction(1))
    w = Fraction(1 - q)
    main = Fraction(math.perm(q - 1, k), q)
    if b:
        chi_b = quadratic_character(b)
        a1 = a_kb(k, SieveArgs(lo, hi, w, chi_b), F)
        a2 = a_kb(k, SieveArgs(hi, lo, w, chi_b), F)
        if is_real_case(F):
            term = lo * a1 + hi * a2
        else:
            term = hi * a1 + lo * a2
        value = main - term * Fraction((-1) ** k, 2 * q)
        label = "distinct/nonzero-b"
    else:
        a1 = a_kb(k, SieveArgs(lo, hi, w, 1), F)
        a2 = a_kb(k, SieveArgs(hi, lo, w, 1), F)
        value = main + (a1 + a2) * Fraction((-1) ** k * (q - 1), 2 * q)
        label = "distinct/zero-b"
    return _certify(value, f"{label}/{branch(F)}")


# -- subset sums of quadratic residues ---------------------------------------

def _check_subset_k(k: int, F: FieldSpec) -> None:
    if not 0 <= k <= F.half:
        raise KOutOfRange(f"k must lie in [0, {F.half}]")


def _n_H_general(k: int, b: FieldElement, F: FieldSpec) -> CountResult:
    q = F.q
    outer_lo, outer_hi = _conjugate_pair(F, Fraction(1))
    lo, hi = outer_lo / 2, outer_hi / 2
    w = Fraction(1 - q, 2)
    main = Fraction(math.comb(F.half, k), q)
    denom = 2 * q * math.factorial(k)
    if b:
        chi_b = quadratic_character(b)
        a1 = a_kb(k, SieveArgs(lo, hi, w, chi_b), F)
        a2 = a_kb(k, SieveArgs(hi, lo, w, chi_b), F)
        if is_real_case(F):
            term = outer_lo * a1 + outer_hi * a2
        else:
            term = outer_hi * a1 + outer_lo * a2
        value = main - term * Fraction((-1) ** k, denom)
        label = "subset/nonzero-b"
    else:
        a1 = a_kb(k, SieveArgs(lo, hi, w, 1), F)
        a2 = a_kb(k, SieveArgs(hi, lo, w, 1), F)
        value = main + (a1 + a2) * Fraction((-1) ** k * (q - 1), denom)
        label = "subset/zero-b"
    return _certify(value, f"{label}/{branch(F)}")


def even_s_fast(k: int, b: FieldElement, F: FieldSpec) -> CountResult:
    """N_H(k, b) for even s, in plain rationals.

    For even s every integer prime to p is a square in F_q, so the u and v
    slots coincide and the two-argument closed form applies; sqrt(q) = p^(s/2)
    is an ordinary integer.
    """
    if F.s % 2:
        raise OddExtensionDegree("the even-degree shortcut needs s even")
    b = F.element(b)
    _check_subset_k(k, F)
    if k == 0:
        return CountResult(0 if b else 1, "subset/empty")
    q, p = F.q, F.p
    r = p ** (F.s // 2)
    u_lo, u_hi = Fraction(1 - r, 2), Fraction(1 + r, 2)
    w = Fraction(1 - q, 2)
    main = Fraction(math.comb(F.half, k), q)
    denom = 2 * q * math.factorial(k)
    if b:
        if quadratic_character(b) == 1:
            term = (1 - r) * a_closed(k, u_lo, w, p) + (1 + r) * a_closed(k, u_hi, w, p)
        else:
            term = (1 - r) * a_closed(k, u_hi, w, p) + (1 + r) * a_closed(k, u_lo, w, p)
        value = main - term * Fraction((-1) ** k, denom)
        label = "subset/nonzero-b/even-s"
    else:
        term = a_closed(k, u_hi, w, p) + a_closed(k, u_lo, w, p)
        value = main + term * Fraction((-1) ** k * (q - 1), denom)
        label = "subset/zero-b/even-s"
    return _certify(value, label)


def n_H(k: int, b: FieldElement, F: FieldSpec) -> CountResult:
    """Number of k-element subsets of the nonzero squares of F_q summing to b.

    >>> from qrsubsets.finite_field import build_field
    >>> F7 = build_field(7)
    >>> n_H(2, F7.element(3), F7).value
    1
    """
    b = F.element(b)
    _check_subset_k(k, F)
    if k == 0:
        return CountResult(0 if b else 1, "subset/empty")
    general = _n_H_general(k, b, F)
    if F.s % 2:
        return general
    fast = even_s_fast(k, b, F)
    if fast.value != general.value:
        raise ConsistencyError(
            f"even-s shortcut gives {fast.value}, general formula gives {general.value} "
            f"(k={k}, b={b}, {F})"
        )
    return fast

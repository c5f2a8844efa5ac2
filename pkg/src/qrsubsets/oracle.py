"""Brute-force ground truth for the closed-form counts.

Nothing here uses characters, Gauss sums or the sieve: every count is a
plain enumeration over field elements.  Each oracle refuses up front when
the number of enumerated states would exceed its budget.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, ZeroCoefficient
from .finite_field import FieldElement, FieldSpec, field_tables


@dataclass(frozen=True)
class OracleBudget:
    max_states: int = 10**7

    def check(self, states: int, what: str) -> None:
        if states > self.max_states:
            raise BudgetExceeded(
                f"{what}: {states} states exceed budget {self.max_states}"
            )


DEFAULT_BUDGET = OracleBudget()


def _as_table(counts, F: FieldSpec) -> dict[FieldElement, int]:
    T = field_tables(F)
    return {x: int(c) for x, c in zip(T.elements, counts)}


def oracle_diagonal_table(
    a: Sequence[FieldElement], F: FieldSpec, budget: OracleBudget = DEFAULT_BUDGET
) -> dict[FieldElement, int]:
    """For every b, the number of x in (F_q^*)^n with sum a_i x_i^2 = b.

    Every tuple is materialised (vectorised with numpy), one pass for all b.
    """
    a = [F.element(x) for x in a]
    if not a:
        raise ValueError("need at least one coefficient")
    if any(not x for x in a):
        raise ZeroCoefficient("all coefficients must be nonzero")
    budget.check((F.q - 1) ** len(a), "oracle_diagonal")
    T = field_tables(F)
    nonzero_squares = T.square[1:]
    sums = np.zeros(1, dtype=np.int64)
    for ai in a:
        terms = T.scale(ai)[nonzero_squares]
        sums = T.add[sums[:, None], terms[None, :]].ravel()
    return _as_table(np.bincount(sums, minlength=F.q), F)


def oracle_diagonal(
    a: Sequence[FieldElement], b: FieldElement, F: FieldSpec, budget: OracleBudget = DEFAULT_BUDGET
) -> int:
    return oracle_diagonal_table(a, F, budget)[F.element(b)]


def _combination_sums(values: Sequence[int], k: int, add: list[list[int]], q: int) -> list[int]:
    # counts[r] = number of k-subsets of positions in `values` whose sum is element r
    counts = [0] * q
    n = len(values)

    def extend(start: int, depth: int, partial: int) -> None:
        if depth == k:
            counts[partial] += 1
            return
        row = add[partial]
        for j in range(start, n - (k - depth) + 1):
            extend(j + 1, depth + 1, row[values[j]])

    extend(0, 0, 0)
    return counts


def oracle_distinct_table(
    k: int, F: FieldSpec, budget: OracleBudget = DEFAULT_BUDGET, ordered: bool = False
) -> dict[FieldElement, int]:
    """For every b, the number of pairwise distinct x in (F_q^*)^k with sum x_i^2 = b.

    By default the k-subsets of F_q^* are enumerated and each one contributes
    its k! orderings.  ``ordered=True`` walks the ordered injective tuples
    themselves (much slower, for cross-checking on small fields).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    T = field_tables(F)
    add = T.add.tolist()
    squares = T.square[1:].tolist()
    if k > F.q - 1:
        return _as_table([0] * F.q, F)
    if ordered:
        budget.check(math.perm(F.q - 1, k), "oracle_distinct_tuples")
        counts = [0] * F.q
        for tup in itertools.permutations(squares, k):
            acc = 0
            for y in tup:
                acc = add[acc][y]
            counts[acc] += 1
        return _as_table(counts, F)
    budget.check(math.comb(F.q - 1, k), "oracle_distinct_tuples")
    counts = _combination_sums(squares, k, add, F.q)
    fact = math.factorial(k)
    return _as_table([c * fact for c in counts], F)


def oracle_distinct_tuples(
    k: int, b: FieldElement, F: FieldSpec, budget: OracleBudget = DEFAULT_BUDGET, ordered: bool = False
) -> int:
    return oracle_distinct_table(k, F, budget, ordered)[F.element(b)]


def oracle_subset_table(
    k: int, F: FieldSpec, budget: OracleBudget = DEFAULT_BUDGET
) -> dict[FieldElement, int]:
    """For every b, the number of k-subsets of the nonzero squares summing to b."""
    if k < 0:
        raise ValueError("k must be >= 0")
    budget.check(math.comb(F.half, k), "oracle_subset_sum")
    T = field_tables(F)
    residues = [i for i in range(1, F.q) if T.chi[i] == 1]
    counts = _combination_sums(residues, k, T.add.tolist(), F.q)
    return _as_table(counts, F)


def oracle_subset_sum(
    k: int, b: FieldElement, F: FieldSpec, budget: OracleBudget = DEFAULT_BUDGET
) -> int:
    """Count k-combinations of H (in lexicographic order) whose sum is b."""
    b = F.element(b)
    budget.check(math.comb(F.half, k), "oracle_subset_sum")
    T = field_tables(F)
    residues = [x for x in T.elements if x and T.chi[T.idx(x)] == 1]
    total = 0
    for combo in itertools.combinations(residues, k):
        acc = F.zero
        for y in combo:
            acc = acc + y
        total += acc == b
    return total

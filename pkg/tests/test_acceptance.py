"""Exit criteria: closed forms against brute force, identities, certification.

Every criterion records one PASS/FAIL line, printed in the terminal summary.
Zero tolerance on all counts; 1e-6 on the floating Gauss sums.
"""

import itertools
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest
from sympy import primerange

from qrsubsets import counting
from qrsubsets.charsums import (
    CharSlot,
    gauss_closed,
    gauss_direct,
    j0_quadratic_closed,
    jacobi_direct,
    jacobi_quadratic_closed,
)
from qrsubsets.counting import (
    SieveArgs,
    _n_H_general,
    a_closed,
    a_kb,
    c_k_generic,
    even_s_fast,
    n_H,
    n_star,
    n_tilde_star,
    ring_tag,
)
from qrsubsets.errors import NonIntegerResult
from qrsubsets.exact_ring import QuadExact
from qrsubsets.finite_field import build_field, enumerate_elements, quadratic_character
from qrsubsets.oracle import (
    oracle_diagonal,
    oracle_diagonal_table,
    oracle_distinct_table,
    oracle_subset_sum,
    oracle_subset_table,
)

from conftest import ACCEPTANCE_LINES, SWEEP

FIELDS = [build_field(p, s) for p, s in SWEEP]
EVEN_S_FIELDS = [F for F in FIELDS if F.s % 2 == 0]
Q = CharSlot.QUADRATIC


@contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        status = "PASS" if limit is None or elapsed < limit else "FAIL (too slow)"
    finally:
        elapsed = time.perf_counter() - start
        budget = f" / {limit:.0f}s" if limit else ""
        ACCEPTANCE_LINES.append(f"[{status}] {number}. {title} ({elapsed:.1f}s{budget})")
    if limit is not None:
        assert elapsed < limit, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"


def _nonresidue(F):
    return next(x for x in enumerate_elements(F) if quadratic_character(x) == -1)


def test_1_subset_sum_exactness():
    with criterion(1, "n_H = oracle_subset_sum, 9 fields, all b, k <= min(6, (q-1)/2)", 60):
        for F in FIELDS:
            for k in range(min(6, F.half) + 1):
                truth = oracle_subset_table(k, F)
                for b in enumerate_elements(F):
                    assert n_H(k, b, F).value == truth[b], (F, k, b)


def test_2_distinct_tuple_exactness():
    with criterion(2, "n_tilde_star = oracle_distinct_tuples, 9 fields, k <= 5, all b", 120):
        for F in FIELDS:
            for k in range(min(5, F.q - 1) + 1):
                truth = oracle_distinct_table(k, F)
                for b in enumerate_elements(F):
                    assert n_tilde_star(k, b, F).value == truth[b], (F, k, b)


def test_3_diagonal_exactness():
    with criterion(3, "n_star = oracle_diagonal, all residue patterns n <= 3 + 200 random n = 4", 60):
        rng = random.Random(20240)
        for F in FIELDS:
            nz = [x for x in enumerate_elements(F) if x]
            classes = {1: [x for x in nz if quadratic_character(x) == 1],
                       -1: [x for x in nz if quadratic_character(x) == -1]}
            patterns = []
            for n in (1, 2, 3):
                for signs in itertools.product((1, -1), repeat=n):
                    patterns.append([rng.choice(classes[c]) for c in signs])
            patterns += [[rng.choice(nz) for _ in range(4)] for _ in range(200)]
            for a in patterns:
                truth = oracle_diagonal_table(a, F)
                for b in enumerate_elements(F):
                    assert n_star(a, b, F).value == truth[b], (F, a, b)


def test_4_character_sum_closed_forms():
    with criterion(4, "Jacobi closed forms = direct (e <= 4, q <= 27); Gauss within 1e-6 (q <= 200)", 30):
        small = [build_field(p, s) for p, s in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1),
                                                (17, 1), (19, 1), (23, 1), (5, 2), (3, 3)]]
        for F in small:
            for e in range(1, 5):
                assert jacobi_quadratic_closed(e, F) == jacobi_direct([Q] * e, "J", F), (F, e)
                assert j0_quadratic_closed(e, F) == jacobi_direct([Q] * e, "J0", F), (F, e)
        gauss_fields = [(p, 1) for p in primerange(3, 200)]
        gauss_fields += [(3, 2), (5, 2), (3, 3), (7, 2), (3, 4), (11, 2), (5, 3), (13, 2)]
        for p, s in gauss_fields:
            F = build_field(p, s)
            direct = gauss_direct(F.one, F)
            closed, _ = gauss_closed(F)
            assert abs(complex(closed) - direct) < 1e-6, F
            assert abs(abs(direct) ** 2 - F.q) < 1e-6, F


def test_5_mass_identity_q101():
    F = build_field(101)
    with criterion(5, "sum_b n_H(k, b) = C(50, k) at q = 101, k <= 15", 5):
        elements = enumerate_elements(F)
        for k in range(16):
            assert sum(n_H(k, b, F).value for b in elements) == math.comb(50, k), k


def test_6_internal_consistency():
    with criterion(6, "EGF = partition C_k; even-s shortcut = general; u = v closed A = generic", None):
        rng = random.Random(6)
        for trial in range(100):
            k = rng.randint(0, 12)
            if trial % 2:
                D = rng.choice([5, -7, 9, -27, 13])
                t = [QuadExact(Fraction(rng.randint(-20, 20), rng.randint(1, 6)),
                               Fraction(rng.randint(-20, 20), rng.randint(1, 6)), D) for _ in range(k)]
            else:
                t = [Fraction(rng.randint(-50, 50), rng.randint(1, 8)) for _ in range(k)]
            assert c_k_generic(t, "egf") == c_k_generic(t, "partition")
        for F in EVEN_S_FIELDS:
            for k in range(1, min(6, F.half) + 1):
                for b in enumerate_elements(F):
                    assert even_s_fast(k, b, F).value == _n_H_general(k, b, F).value, (F, k, b)
        for F in FIELDS:
            D = ring_tag(F).D
            q = F.q
            for k in range(13):
                for u in ((1 - QuadExact.omega(D)) / 2, (1 + QuadExact.omega(D)) / 2, 1 - QuadExact.omega(D)):
                    for w in (Fraction(1 - q, 2), Fraction(1 - q)):
                        generic = c_k_generic([w if i % F.p == 0 else u for i in range(1, k + 1)])
                        assert a_closed(k, u, w, F.p) == generic, (F, k)
                        assert a_kb(k, SieveArgs(u, u, w, 1), F) == generic


def test_7_integer_certification(monkeypatch):
    certified = []
    failures = []
    real_assert = counting.assert_integer

    def spy(x, context=""):
        try:
            value = real_assert(x, context)
        except NonIntegerResult as exc:
            failures.append(exc)
            raise
        certified.append(context)
        return value

    monkeypatch.setattr(counting, "assert_integer", spy)
    with criterion(7, "assert_integer never fails across the closed-form sweep", None):
        rng = random.Random(7)
        for F in FIELDS + [build_field(101)]:
            elements = enumerate_elements(F)
            nz = elements[1:]
            for b in elements:
                for k in range(min(6, F.half) + 1):
                    n_H(k, b, F)
                for k in range(min(5, F.q - 1) + 1):
                    n_tilde_star(k, b, F)
                for n in range(1, 5):
                    n_star([rng.choice(nz) for _ in range(n)], b, F)
        assert not failures, failures[:3]
        assert len(certified) > 4000
        branches = {c.rsplit("/", 1)[-1] for c in certified}
        assert {"real", "imaginary"} <= branches


def test_8_spot_values():
    with criterion(8, "spot values by closed form and by oracle", None):
        F5, F7 = build_field(5), build_field(7)
        for k, b, F, expected in [(2, 3, F7, 1), (3, 0, F7, 1), (2, 0, F5, 1)]:
            b = F.element(b)
            assert n_H(k, b, F).value == expected
            assert oracle_subset_sum(k, b, F) == expected
        assert n_star([1, 1], 0, F5).value == 8
        assert oracle_diagonal([F5.one, F5.one], F5.zero, F5) == 8
        assert jacobi_quadratic_closed(2, F5) == -1 == jacobi_direct([Q, Q], "J", F5)
        assert j0_quadratic_closed(2, F5) == 4 == jacobi_direct([Q, Q], "J0", F5)

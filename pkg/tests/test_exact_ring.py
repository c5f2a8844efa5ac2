from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrsubsets.errors import NonIntegerResult, TagMismatch
from qrsubsets.exact_ring import (
    QuadExact,
    assert_integer,
    binomial_general,
    conj,
    falling_factorial,
    format_quad,
    power,
    scalar_mul,
)

rationals = st.builds(Fraction, st.integers(-1000, 1000), st.integers(1, 30))


def quads(D):
    return st.builds(lambda a, b: QuadExact(a, b, D), rationals, rationals)


def W(D):
    return QuadExact.omega(D)


class TestExamples:
    def test_products(self):
        assert (1 + W(5)) * (1 - W(5)) == -4
        assert (1 + W(-7)) * (-1 + W(-7)) == -8
        x = QuadExact(3, 2, 5)
        assert x * 1 == x

    def test_powers(self):
        assert power(1 + W(5), 2) == QuadExact(6, 2, 5)
        assert power(1 - W(5), 2) * power(1 + W(5), 0) == QuadExact(6, -2, 5)
        assert power(QuadExact(3, 7, 5), 0) == 1

    def test_conj(self):
        x = QuadExact(3, 2, 5)
        assert conj(x) == QuadExact(3, -2, 5)
        assert x + conj(x) == QuadExact(6, 0, 5)

    def test_falling_factorial(self):
        assert falling_factorial(Fraction(4), 2) == 12
        assert falling_factorial(W(5), 3) == QuadExact(-15, 7, 5)
        assert falling_factorial(W(5), 0) == 1

    def test_binomial_general(self):
        assert binomial_general(Fraction(-1), 3) == -1
        assert binomial_general(Fraction(1, 2), 2) == Fraction(-1, 8)
        assert binomial_general(W(5), 2) == QuadExact(Fraction(5, 2), Fraction(-1, 2), 5)

    def test_assert_integer(self):
        assert assert_integer(QuadExact(8, 0, 5)) == 8
        with pytest.raises(NonIntegerResult) as err:
            assert_integer(QuadExact(Fraction(1, 2), 0, 5))
        assert err.value.value == QuadExact(Fraction(1, 2), 0, 5)
        with pytest.raises(NonIntegerResult):
            assert_integer(QuadExact(3, 1, 5))
        assert assert_integer(Fraction(6, 3)) == 2

    def test_tag_mismatch(self):
        with pytest.raises(TagMismatch):
            W(5) + W(-5)
        with pytest.raises(TagMismatch):
            W(5) * W(7)

    def test_scalar_mul_and_lowest_terms(self):
        x = scalar_mul(QuadExact(Fraction(2, 4), 3, 5), Fraction(-2, 6))
        assert (x.a, x.b) == (Fraction(-1, 6), Fraction(-1))
        assert x.a.denominator > 0

    def test_text_form(self):
        assert format_quad(W(5)) == "ω [ω²=5]"
        assert format_quad(QuadExact(1, -2, -3)) == "1 - 2·ω [ω²=-3]"
        assert format_quad(QuadExact(Fraction(5, 2), 0, 9)) == "5/2 [ω²=9]"

    def test_complex_embedding(self):
        assert complex(W(5)) == pytest.approx(5**0.5)
        assert complex(W(-3)) == pytest.approx(1j * 3**0.5)


@pytest.mark.parametrize("D", [5, -7, 9, -27])
class TestRingProperties:
    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_ring_axioms(self, D, data):
        x, y, z = (data.draw(quads(D)) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x and x * y == y * x
        assert x - x == 0

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_conj_is_automorphism_and_norm_multiplicative(self, D, data):
        x, y = data.draw(quads(D)), data.draw(quads(D))
        assert conj(x * y) == conj(x) * conj(y)
        assert conj(x + y) == conj(x) + conj(y)
        assert (x * conj(x)).b == 0
        assert (x * y).norm() == x.norm() * y.norm()

    @settings(max_examples=50, deadline=None)
    @given(data=st.data(), n=st.integers(0, 12))
    def test_power_is_repeated_product(self, D, data, n):
        x = data.draw(quads(D))
        acc = QuadExact(1, 0, D)
        for _ in range(n):
            acc = acc * x
        assert power(x, n) == acc


def test_randomised_ring_axioms_bulk():
    # 10^4 seeded random triples per tag, as a plain loop
    import random

    rng = random.Random(1234)

    def rnd(D):
        return QuadExact(Fraction(rng.randint(-50, 50), rng.randint(1, 9)),
                         Fraction(rng.randint(-50, 50), rng.randint(1, 9)), D)

    for D in (13, -11):
        for _ in range(10**4):
            x, y, z = rnd(D), rnd(D), rnd(D)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert conj(x * y) == conj(x) * conj(y)

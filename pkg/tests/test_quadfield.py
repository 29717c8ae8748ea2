from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chainspectra.errors import NotRational
from chainspectra.quadfield import (
    A,
    B,
    ONE,
    SQRT14,
    ZERO,
    QuadNumber,
    quad_conjugate,
    quad_mul,
    quad_pow,
    quad_to_int,
    quad_to_rational,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**6)
quads = st.builds(QuadNumber, rationals, rationals)
nonzero_quads = quads.filter(lambda x: x != ZERO)


def test_product_of_roots_is_one():
    assert quad_mul(A, B) == QuadNumber(1, 0)


def test_identity():
    assert quad_mul(A, ONE) == A


def test_square_of_A():
    # (15 + 4s)^2 = 225 + 16*14 + 120 s
    assert quad_mul(A, A) == QuadNumber(449, 120)
    assert quad_pow(A, 2) == QuadNumber(449, 120)


def test_pow_zero():
    assert quad_pow(A, 0) == ONE


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        quad_pow(A, -1)
    assert A ** -1 == B


@pytest.mark.parametrize("n", range(51))
def test_powers_are_reciprocal(n):
    assert quad_mul(quad_pow(A, n), quad_pow(B, n)) == ONE


def test_conjugate():
    assert quad_conjugate(A) == B
    assert quad_conjugate(ONE) == ONE


def test_roots_of_t2_minus_30t_plus_1():
    assert A + B == 30
    assert A * B == 1
    for r in (A, B):
        assert r * r - 30 * r + 1 == ZERO


def test_to_rational():
    assert quad_to_rational(QuadNumber(183, 0)) == 183
    assert quad_to_rational(QuadNumber(62, 0)) == 62
    with pytest.raises(NotRational):
        quad_to_rational(QuadNumber(1, 1))
    with pytest.raises(NotRational):
        quad_to_int(QuadNumber(Fraction(1, 2), 0))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_no_floats_accepted():
    with pytest.raises(TypeError):
        QuadNumber(0.5, 0)


def test_sqrt14_squared():
    assert SQRT14 * SQRT14 == 14
    assert SQRT14 / 28 * (2 * SQRT14) == ONE


@given(quads, quads)
def test_conjugation_is_multiplicative(x, y):
    assert quad_conjugate(x * y) == quad_conjugate(x) * quad_conjugate(y)


@given(quads, quads)
def test_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(quads, quads, quads)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == ZERO


@given(nonzero_quads)
def test_inverse(x):
    assert x * x.inverse() == ONE
    assert x / x == ONE


@given(rationals)
def test_rational_embedding(q):
    x = QuadNumber(q, 0)
    assert quad_to_rational(x) == q
    assert x == q
    assert hash(x) == hash(q)

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from csai.scalars import (GaussRational, I, J, K, RatQuaternion, conj, format_rational, quat_mul,
                          rat, real_part)

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
quats = st.builds(RatQuaternion, rationals, rationals, rationals, rationals)
gauss = st.builds(GaussRational, rationals, rationals)


def test_unit_relations():
    assert quat_mul(I, J) == K
    assert quat_mul(J, I) == -K
    assert quat_mul(K, K) == -1
    assert I * I == J * J == K * K == RatQuaternion(-1)


def test_conj_examples():
    assert conj(I) == -I
    assert conj(RatQuaternion(1, 2, 3, 4)) == RatQuaternion(1, -2, -3, -4)
    assert conj(GaussRational(1, 5)) == GaussRational(1, -5)


def test_real_part_examples():
    assert real_part(I) == 0
    assert real_part(Fraction(3, 2) + J) == Fraction(3, 2)


def test_rational_helpers():
    assert rat("3/6") == Fraction(1, 2)
    assert format_rational(Fraction(-4, 2)) == "-2"
    assert format_rational(Fraction(5, 10)) == "1/2"
    with pytest.raises(TypeError):
        rat(True)


@given(quats, quats)
def test_product_matches_sympy(p, q):
    assert oracles.from_quaternion(oracles.to_quaternion(p) * oracles.to_quaternion(q)) == p * q


@given(quats, quats, quats)
def test_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(quats, quats)
def test_conj_antimultiplicative(p, q):
    assert conj(p * q) == conj(q) * conj(p)
    assert conj(conj(p)) == p


@given(quats)
def test_norm_anisotropic(q):
    n = q * conj(q)
    assert n == RatQuaternion(q.norm())
    assert q.norm() >= 0
    assert (q.norm() == 0) == (not q)
    assert real_part(q + conj(q)) == 2 * real_part(q)


@given(quats.filter(bool))
def test_inverse(q):
    assert q * q.inverse() == 1 == q.inverse() * q


@given(gauss, gauss)
def test_gauss_field(a, b):
    assert a * b == b * a
    assert conj(a * b) == conj(a) * conj(b)
    if a:
        assert a * a.inverse() == 1


def test_hash_consistent_with_rationals():
    assert hash(GaussRational(3)) == hash(Fraction(3))
    assert hash(RatQuaternion(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert GaussRational(3) == 3 and RatQuaternion(2) == Fraction(2)


def test_immutable():
    q = RatQuaternion(1, 2, 3, 4)
    with pytest.raises(AttributeError):
        q.a = 5


def test_random_mixed_arithmetic():
    rng = random.Random(3)
    for _ in range(50):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        q = RatQuaternion(*(Fraction(rng.randint(-9, 9)) for _ in range(4)))
        assert a * q == q * a
        assert (q + a) - a == q

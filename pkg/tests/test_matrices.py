import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

import oracles
from csai.errors import NotInvertible, ShapeError
from csai.matrices import (Kind, Matrix, MatrixTuple, adjoint, basis, diag, from_vector,
                           identity, invert, mat_mul, reduced_trace, star_embed, star_pullback,
                           to_vector, trace, transpose, unit_matrix, zeros)
from csai.sampling import random_invertible, random_matrix
from csai.scalars import GaussRational, I, J, K

seeds = st.integers(0, 10**6)
kinds = st.sampled_from(list(Kind))
sizes = st.integers(1, 3)


def test_mul_examples():
    A = Matrix(Kind.REAL, [[1, 2], [3, 4]])
    assert mat_mul(identity(Kind.REAL, 2), A) == A
    E12, E21 = unit_matrix(Kind.REAL, 2, 0, 1), unit_matrix(Kind.REAL, 2, 1, 0)
    assert mat_mul(E12, E21) == unit_matrix(Kind.REAL, 2, 0, 0)
    jI, iI = Matrix(Kind.QUATERNION, [[J]]), Matrix(Kind.QUATERNION, [[I]])
    assert mat_mul(jI, iI) == Matrix(Kind.QUATERNION, [[-K]])


def test_shape_errors():
    with pytest.raises(ShapeError):
        mat_mul(identity(Kind.REAL, 2), identity(Kind.REAL, 3))
    with pytest.raises(ShapeError):
        mat_mul(identity(Kind.REAL, 2), identity(Kind.COMPLEX, 2))
    with pytest.raises(ShapeError):
        Matrix(Kind.REAL, [[1, 2]])
    with pytest.raises(ShapeError):
        Matrix(Kind.REAL, [[I]])
    with pytest.raises(ShapeError):
        MatrixTuple([])


def test_adjoint_examples():
    assert adjoint(identity(Kind.QUATERNION, 3)) == identity(Kind.QUATERNION, 3)
    A = Matrix(Kind.QUATERNION, [[0, I], [0, 0]])
    assert adjoint(A) == Matrix(Kind.QUATERNION, [[0, 0], [-I, 0]])
    B = Matrix(Kind.REAL, [[1, 2], [3, 4]])
    assert adjoint(B) == transpose(B)


def test_reduced_trace_examples():
    assert reduced_trace(identity(Kind.QUATERNION, 1)) == 2
    assert reduced_trace(Matrix(Kind.QUATERNION, [[I]])) == 0
    assert reduced_trace(diag(Kind.REAL, [1, 2])) == 3
    assert reduced_trace(Matrix(Kind.COMPLEX, [[GaussRational(1, 2)]])) == GaussRational(1, 2)
    for kind in Kind:
        for n in (1, 2, 3):
            assert reduced_trace(identity(kind, n)) == kind.degree(n)


def test_star_examples():
    jI = Matrix(Kind.QUATERNION, [[J]])
    assert star_embed(jI) == Matrix(Kind.COMPLEX, [[0, -1], [1, 0]])
    assert star_embed(identity(Kind.QUATERNION, 1)) == identity(Kind.COMPLEX, 2)
    with pytest.raises(ShapeError):
        star_embed(identity(Kind.REAL, 2))
    with pytest.raises(ShapeError):
        star_pullback(Matrix(Kind.COMPLEX, [[1, 0], [0, 2]]))


def test_invert_examples():
    assert invert(identity(Kind.COMPLEX, 3)) == identity(Kind.COMPLEX, 3)
    assert invert(diag(Kind.REAL, [2, 3])) == diag(Kind.REAL, [Fraction(1, 2), Fraction(1, 3)])
    Q = Matrix(Kind.QUATERNION, [[I, 0], [0, J]])
    assert invert(Q) == Matrix(Kind.QUATERNION, [[-I, 0], [0, -J]])
    assert mat_mul(Q, invert(Q)) == identity(Kind.QUATERNION, 2)
    with pytest.raises(NotInvertible):
        invert(Matrix(Kind.REAL, [[1, 2], [2, 4]]))
    with pytest.raises(NotInvertible):
        invert(Matrix(Kind.QUATERNION, [[1, I], [-I, 1]]))


@given(seeds, sizes)
def test_star_functorial(seed, n):
    rng = random.Random(seed)
    A, B = (random_matrix(rng, Kind.QUATERNION, n) for _ in range(2))
    assert star_embed(A + B) == star_embed(A) + star_embed(B)
    assert star_embed(mat_mul(A, B)) == mat_mul(star_embed(A), star_embed(B))
    assert star_embed(adjoint(A)) == adjoint(star_embed(A))
    assert star_pullback(star_embed(A)) == A
    assert trace(star_embed(A)) == reduced_trace(A)


@given(seeds, kinds, sizes)
def test_reduced_trace_matches_oracle(seed, kind, n):
    rng = random.Random(seed)
    A = random_matrix(rng, kind, n)
    assert oracles.to_sympy_scalar(GaussRational.coerce(reduced_trace(A))) \
        == oracles.reduced_trace(A)


@given(seeds, kinds, sizes)
def test_product_matches_oracle(seed, kind, n):
    rng = random.Random(seed)
    A, B = (random_matrix(rng, kind, n) for _ in range(2))
    diff = oracles.to_sympy(mat_mul(A, B)) - oracles.to_sympy(A) * oracles.to_sympy(B)
    assert diff.applyfunc(sympy.expand) == sympy.zeros(*diff.shape)


@given(seeds, kinds, sizes)
def test_trace_symmetry_and_conjugation(seed, kind, n):
    rng = random.Random(seed)
    A, B = (random_matrix(rng, kind, n) for _ in range(2))
    g = random_invertible(rng, kind, n)
    assert reduced_trace(mat_mul(A, B)) == reduced_trace(mat_mul(B, A))
    assert reduced_trace(mat_mul(mat_mul(g, A), invert(g))) == reduced_trace(A)


@given(seeds, kinds, sizes)
def test_inverse_two_sided(seed, kind, n):
    rng = random.Random(seed)
    g = random_invertible(rng, kind, n)
    h = invert(g)
    one = identity(kind, n)
    assert mat_mul(g, h) == one == mat_mul(h, g)
    if kind is not Kind.QUATERNION:
        assert oracles.to_sympy(h) == oracles.to_sympy(g).inv()


@given(seeds, kinds, sizes)
def test_adjoint_laws(seed, kind, n):
    rng = random.Random(seed)
    A, B = (random_matrix(rng, kind, n) for _ in range(2))
    assert adjoint(adjoint(A)) == A
    assert adjoint(mat_mul(A, B)) == mat_mul(adjoint(B), adjoint(A))


@given(seeds, kinds, sizes)
def test_vector_roundtrip(seed, kind, n):
    A = random_matrix(random.Random(seed), kind, n)
    assert from_vector(kind, n, to_vector(A)) == A
    B = basis(kind, n)
    assert sum((x * c for x, c in zip(B, to_vector(A))), zeros(kind, n)) == A


def test_rational_scalars_commute_with_matrices():
    A = Matrix(Kind.QUATERNION, [[I, J], [K, 1]])
    assert A * Fraction(1, 2) == Fraction(1, 2) * A
    assert (I * A) != (A * I)

"""Seeded generators for similarity instances shared by the word tests."""
from csai.matrices import Matrix, adjoint, mat_mul
from csai.sampling import random_antihermitian, random_matrix
from csai.words import cayley_unitary


def conjugate_pair(rng, kind, n, d, height=10):
    """X random, Y_i = adjoint(O) X_i O with O a Cayley unitary."""
    X = [random_matrix(rng, kind, n, height) for _ in range(d)]
    O = cayley_unitary(random_antihermitian(rng, kind, n, height))
    Y = [mat_mul(mat_mul(adjoint(O), M), O) for M in X]
    return X, Y, O


def bump(Y, r=0, s=0, which=0):
    """Copy of the tuple with entry (r, s) of Y[which] increased by 1."""
    M = Y[which]
    rows = [list(row) for row in M.rows]
    rows[r][s] = rows[r][s] + 1
    return Y[:which] + [Matrix(M.kind, rows)] + Y[which + 1:]

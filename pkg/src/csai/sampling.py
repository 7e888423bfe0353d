"""Seeded random generators for exact test data.

Every generator takes an explicit :class:`random.Random` so that results are
reproducible.  Rationals are drawn with numerator and denominator bounded by
``height``.
"""
from fractions import Fraction

from .errors import NotInvertible
from .matrices import Kind, Matrix, adjoint, invert, mat_mul


def random_rational(rng, height=10):
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_scalar(rng, kind, height=10):
    kind = Kind(kind)
    return kind.from_components([random_rational(rng, height) for _ in range(kind.dim)])


def random_matrix(rng, kind, n, height=10, density=1.0):
    kind = Kind(kind)
    z = kind.zero()
    return Matrix(kind, [[random_scalar(rng, kind, height) if rng.random() < density else z
                          for _ in range(n)] for _ in range(n)])


def random_hermitian(rng, kind, n, height=10):
    A = random_matrix(rng, kind, n, height)
    return A + adjoint(A)


def random_antihermitian(rng, kind, n, height=10):
    A = random_matrix(rng, kind, n, height)
    return A - adjoint(A)


def random_invertible(rng, kind, n, height=10):
    while True:
        g = random_matrix(rng, kind, n, height)
        try:
            invert(g)
        except NotInvertible:
            continue
        return g


def random_psd(rng, kind, n, height=10):
    g = random_matrix(rng, kind, n, height)
    return mat_mul(adjoint(g), g)


def random_symmetric_invertible(rng, kind, n, height=10):
    while True:
        a = random_hermitian(rng, kind, n, height)
        try:
            invert(a)
        except NotInvertible:
            continue
        return a


"""Exact computations in central simple algebras with involution over Q.

Matrix models M_n(D) for D = Q, Q(sqrt(-1)) and the rational quaternions,
their involutions and positive cones, trace-of-words similarity tests, and
checks on algebras given by structure constants.
"""
from .errors import (AlgebraError, BadCertificate, Inconclusive, InternalInconsistency,
                     InvolutionError, NoSolution, NotHermitian, NotInvertible, ShapeError)
from .matrices import (Kind, Matrix, MatrixTuple, adjoint, basis, diag, identity, invert,
                       mat_mul, reduced_trace, star_embed, star_pullback, trace, zeros)
from .scalars import GaussRational, RatQuaternion, Rational

__all__ = [
    "AlgebraError", "BadCertificate", "Inconclusive", "InternalInconsistency",
    "InvolutionError", "NoSolution", "NotHermitian", "NotInvertible", "ShapeError",
    "Kind", "Matrix", "MatrixTuple", "adjoint", "basis", "diag", "identity", "invert",
    "mat_mul", "reduced_trace", "star_embed", "star_pullback", "trace", "zeros",
    "GaussRational", "RatQuaternion", "Rational",
]

"""Involutions Int(a) o adjoint on M_n(D), with a hermitian and invertible.

By Skolem-Noether every involution of the same kind as the conjugate
transpose has this shape, so it is the only representation used here.
"""
from dataclasses import dataclass
from fractions import Fraction

from . import cones
from .errors import InternalInconsistency, InvolutionError, NoSolution, NotInvertible, ShapeError
from .linalg import integer_normalize, nullspace, rank
from .matrices import (Kind, Matrix, adjoint, basis, from_vector, identity, invert,
                       is_hermitian, mat_mul, qdim, to_vector)
from .scalars import GaussRational, real_part
from .verdict import Verdict


class Involution:
    """x |-> scale * adjoint(x) * scale^-1.

    With ``check=True`` (the default) the scale must be hermitian and
    invertible; ``check=False`` builds the map anyway so that
    :func:`verify_involution` can diagnose it.
    """

    def __init__(self, kind, n, scale=None, check=True):
        self.kind = Kind(kind)
        self.n = n
        if scale is None:
            scale = identity(self.kind, n)
        if scale.kind is not self.kind or scale.n != n:
            raise ShapeError("scale does not match the algebra")
        self.scale = scale
        self.is_standard = scale == identity(self.kind, n)
        try:
            self.scale_inv = invert(scale)
        except NotInvertible:
            if check:
                raise InvolutionError("scale is not invertible") from None
            self.scale_inv = None
        if check and not is_hermitian(scale):
            raise InvolutionError("scale is not symmetric: adjoint(a) != a")

    @classmethod
    def standard(cls, kind, n):
        return cls(kind, n)

    def apply(self, x):
        if x.kind is not self.kind or x.n != self.n:
            raise ShapeError("argument does not match the involution's algebra")
        if self.is_standard:
            return adjoint(x)
        if self.scale_inv is None:
            raise InvolutionError("scale is not invertible")
        return mat_mul(mat_mul(self.scale, adjoint(x)), self.scale_inv)

    __call__ = apply

    def __repr__(self):
        return f"Involution({self.kind.value}, {self.n}, scale={self.scale!r})"


def apply(inv, x):
    return inv.apply(x)


@dataclass(frozen=True)
class InvolutionKindAndType:
    kind: str  # "first" | "second"
    type: str  # "orthogonal" | "symplectic" | "unitary"
    dim_sym: int


def verify_involution(inv):
    """Check the involution axioms on the canonical Q-basis; report the first failure."""
    a = inv.scale
    if not is_hermitian(a):
        return Verdict.failed("scale is not symmetric: adjoint(a) != a")
    if inv.scale_inv is None:
        return Verdict.failed("scale is not invertible")
    kind, n = inv.kind, inv.n
    one = identity(kind, n)
    for q in (Fraction(1), Fraction(-3, 2)):
        if inv.apply(one * q) != one * q:
            return Verdict.failed(f"does not fix the rational scalar {q}")
    B = basis(kind, n)
    images = [inv.apply(x) for x in B]
    for x, sx in zip(B, images):
        if inv.apply(sx) != x:
            return Verdict.failed(f"sigma(sigma(x)) != x for basis element {x!r}")
    for u, (x, sx) in enumerate(zip(B, images)):
        for v, (y, sy) in enumerate(zip(B, images)):
            if inv.apply(x * Fraction(2, 3) + y) != sx * Fraction(2, 3) + sy:
                return Verdict.failed(f"not Q-linear on basis pair ({u}, {v})")
            if inv.apply(mat_mul(x, y)) != mat_mul(sy, sx):
                return Verdict.failed(f"sigma(xy) != sigma(y)sigma(x) on basis pair ({u}, {v})")
    return Verdict.passed()


def _map_matrix(f, kind, n):
    """Columns: coordinates of f(e_u) for the canonical basis."""
    cols = [to_vector(f(x)) for x in basis(kind, n)]
    return [list(row) for row in zip(*cols)]


def symmetric_dimension(inv):
    """dim_Q Sym(M_n(D), sigma), from the rank of sigma - id."""
    m = qdim(inv.kind, inv.n)
    S = _map_matrix(inv.apply, inv.kind, inv.n)
    for i in range(m):
        S[i][i] -= 1
    return m - rank(S)


def classify(inv):
    kind, n = inv.kind, inv.n
    dim_sym = symmetric_dimension(inv)
    if kind is Kind.COMPLEX:
        centre_gen = identity(kind, n) * GaussRational(0, 1)
        if inv.apply(centre_gen) == centre_gen:
            raise InternalInconsistency("involution on M_n(Q(i)) fixes the centre")
        if dim_sym != n * n:
            raise InternalInconsistency(f"unitary involution with dim Sym = {dim_sym} != {n * n}")
        return InvolutionKindAndType("second", "unitary", dim_sym)
    m = kind.degree(n)
    if dim_sym == m * (m + 1) // 2:
        return InvolutionKindAndType("first", "orthogonal", dim_sym)
    if dim_sym == m * (m - 1) // 2:
        return InvolutionKindAndType("first", "symplectic", dim_sym)
    raise InternalInconsistency(
        f"dim Sym = {dim_sym} matches neither m(m+1)/2 nor m(m-1)/2 for m = {m}")


def solve_scaling(sigma, gamma):
    """Find invertible a with sigma = Int(a) o gamma, normalized to coprime integers.

    Solves sigma(x) * a = a * gamma(x) for x over the canonical basis; the
    solution space is the centre times one invertible element.
    """
    if sigma.kind is not gamma.kind or sigma.n != gamma.n:
        raise ShapeError("involutions live on different algebras")
    kind, n = sigma.kind, sigma.n
    m = qdim(kind, n)
    B = basis(kind, n)
    rows = []
    for x in B:
        sx, gx = sigma.apply(x), gamma.apply(x)
        cols = [to_vector(mat_mul(sx, w) - mat_mul(w, gx)) for w in B]
        rows.extend(list(r) for r in zip(*cols))
    for vec in nullspace(rows, m):
        a = from_vector(kind, n, integer_normalize(vec))
        try:
            invert(a)
        except NotInvertible:
            continue
        return a
    raise NoSolution("no invertible a satisfies sigma = Int(a) o gamma")


def _trace_form_row(M, kind, n):
    # T(M * E_{r,s} q) for every basis element, where T is Trd descended to Q
    # (twice the real part for complex and quaternion kinds): only the
    # (s, s) entry M[s][r] * q contributes to the diagonal.
    factor = 1 if kind is Kind.REAL else 2
    return [factor * real_part(M.rows[s][r] * q)
            for r in range(n) for s in range(n) for q in kind.units()]


def trace_form_gram(inv):
    """Gram matrix over Q of (x, y) |-> Trd(sigma(x) y), descended to Q."""
    kind, n = inv.kind, inv.n
    return [_trace_form_row(inv.apply(x), kind, n) for x in basis(kind, n)]


def is_positive(inv):
    """Return ``(bool, certificate)``: positive iff the trace form is positive definite."""
    G = Matrix(Kind.REAL, trace_form_gram(inv))
    cert = cones.diagonalize_congruence(G)
    return all(x > 0 for x in cert.d), cert


def verify_scaling_iso(a, b, inv):
    """Check a^-1 = sigma(b) b and that Int(b) intertwines Int(a) o sigma with sigma."""
    try:
        a_inv = invert(a)
        b_inv = invert(b)
    except NotInvertible as exc:
        return Verdict.failed(f"singular input: {exc}")
    if mat_mul(inv.apply(b), b) != a_inv:
        return Verdict.failed("a^-1 != sigma(b) * b")
    for x in basis(inv.kind, inv.n):
        left = mat_mul(mat_mul(b, mat_mul(mat_mul(a, inv.apply(x)), a_inv)), b_inv)
        right = inv.apply(mat_mul(mat_mul(b, x), b_inv))
        if left != right:
            return Verdict.failed(f"Int(b) does not intertwine on basis element {x!r}")
    return Verdict.passed()

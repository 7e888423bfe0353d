"""Dense exact matrices over Q, Q(sqrt(-1)) and the rational quaternions.

A :class:`Matrix` is an immutable n x n array together with its
:class:`Kind`.  The involution on M_n(D) is the conjugate transpose
(:func:`adjoint`); :func:`reduced_trace` is the trace after splitting,
which for quaternion matrices is twice the real part of the ordinary trace.
"""
import enum
from fractions import Fraction
from math import lcm

from .errors import NotInvertible, ShapeError
from .scalars import GaussRational, RatQuaternion, rat


class Kind(enum.Enum):
    REAL = "real"
    COMPLEX = "complex"
    QUATERNION = "quaternion"

    @property
    def dim(self):
        """Dimension of D over Q."""
        return {Kind.REAL: 1, Kind.COMPLEX: 2, Kind.QUATERNION: 4}[self]

    def degree(self, n):
        """deg M_n(D): n, n and 2n for the three kinds."""
        return 2 * n if self is Kind.QUATERNION else n

    def zero(self):
        return _ZERO[self]

    def one(self):
        return _ONE[self]

    def coerce(self, x):
        if self is Kind.REAL:
            if isinstance(x, (GaussRational, RatQuaternion)):
                raise ShapeError(f"non-real entry {x!r} in a real matrix")
            return rat(x)
        if self is Kind.COMPLEX:
            if isinstance(x, RatQuaternion):
                raise ShapeError(f"quaternion entry {x!r} in a complex matrix")
            return GaussRational.coerce(x)
        if isinstance(x, GaussRational):
            # sqrt(-1) is identified with i
            return RatQuaternion(x.re, x.im)
        return RatQuaternion.coerce(x)

    def components(self, x):
        if self is Kind.REAL:
            return (x,)
        return x.components()

    def from_components(self, comps):
        if self is Kind.REAL:
            return rat(comps[0])
        if self is Kind.COMPLEX:
            return GaussRational(*comps)
        return RatQuaternion(*comps)

    def units(self):
        """The Q-basis of D: 1 / 1, i / 1, i, j, k."""
        return _UNITS[self]

    def conj(self, x):
        if self is Kind.REAL:
            return x
        return x.conj()

    @classmethod
    def parse(cls, name):
        try:
            return cls(name)
        except ValueError:
            raise ShapeError(f"unknown kind {name!r}") from None


_ZERO = {Kind.REAL: Fraction(0), Kind.COMPLEX: GaussRational(0, 0),
         Kind.QUATERNION: RatQuaternion(0)}
_ONE = {Kind.REAL: Fraction(1), Kind.COMPLEX: GaussRational(1, 0),
        Kind.QUATERNION: RatQuaternion(1)}
_UNITS = {
    Kind.REAL: (Fraction(1),),
    Kind.COMPLEX: (GaussRational(1), GaussRational(0, 1)),
    Kind.QUATERNION: (RatQuaternion(1), RatQuaternion(0, 1), RatQuaternion(0, 0, 1),
                      RatQuaternion(0, 0, 0, 1)),
}
UNIT_NAMES = {Kind.REAL: ("1",), Kind.COMPLEX: ("1", "i"),
              Kind.QUATERNION: ("1", "i", "j", "k")}


class Matrix:
    """Immutable square matrix over one of the three division algebras."""

    __slots__ = ("kind", "n", "rows")

    def __init__(self, kind, rows):
        kind = Kind(kind) if not isinstance(kind, Kind) else kind
        rows = tuple(tuple(kind.coerce(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ShapeError("matrix must be square and non-empty")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _raw(cls, kind, rows):
        # entries already of the right scalar type
        self = object.__new__(cls)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "n", len(rows))
        object.__setattr__(self, "rows", rows)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __getitem__(self, idx):
        r, s = idx
        return self.rows[r][s]

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise ShapeError(f"expected a Matrix, got {type(other).__name__}")
        if other.kind is not self.kind or other.n != self.n:
            raise ShapeError(
                f"mismatch: {self.kind.value}[{self.n}] vs {other.kind.value}[{other.n}]")

    def __add__(self, other):
        self._check(other)
        return Matrix._raw(self.kind, tuple(
            tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other):
        self._check(other)
        return Matrix._raw(self.kind, tuple(
            tuple(x - y for x, y in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)))

    def __neg__(self):
        return Matrix._raw(self.kind, tuple(tuple(-x for x in row) for row in self.rows))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        c = self.kind.coerce(other)
        return Matrix._raw(self.kind, tuple(tuple(x * c for x in row) for row in self.rows))

    def __rmul__(self, other):
        c = self.kind.coerce(other)
        return Matrix._raw(self.kind, tuple(tuple(c * x for x in row) for row in self.rows))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.kind is other.kind and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.kind, self.rows))

    def is_zero(self):
        return not any(x for row in self.rows for x in row)

    def __repr__(self):
        return f"Matrix({self.kind.value}, {[list(r) for r in self.rows]!r})"


def identity(kind, n):
    kind = Kind(kind)
    z, o = kind.zero(), kind.one()
    return Matrix._raw(kind, tuple(tuple(o if r == s else z for s in range(n))
                                   for r in range(n)))


def zeros(kind, n):
    kind = Kind(kind)
    z = kind.zero()
    return Matrix._raw(kind, tuple((z,) * n for _ in range(n)))


def diag(kind, values):
    kind = Kind(kind)
    n = len(values)
    z = kind.zero()
    return Matrix(kind, [[values[r] if r == s else z for s in range(n)] for r in range(n)])


def unit_matrix(kind, n, r, s, value=1):
    """value * E_{r,s} (0-based indices)."""
    kind = Kind(kind)
    z = kind.zero()
    v = kind.coerce(value)
    return Matrix._raw(kind, tuple(tuple(v if (i, j) == (r, s) else z for j in range(n))
                                   for i in range(n)))


def mat_mul(A, B):
    """Product A*B; quaternion entries are multiplied row-entry times column-entry."""
    A._check(B)
    cols = tuple(zip(*B.rows))
    z = A.kind.zero()
    rows = []
    for row in A.rows:
        out = []
        for col in cols:
            acc = z
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        rows.append(tuple(out))
    return Matrix._raw(A.kind, tuple(rows))


def transpose(A):
    return Matrix._raw(A.kind, tuple(zip(*A.rows)))


def adjoint(A):
    """Entrywise canonical conjugation followed by transposition."""
    if A.kind is Kind.REAL:
        return transpose(A)
    return Matrix._raw(A.kind, tuple(tuple(x.conj() for x in col) for col in zip(*A.rows)))


def is_hermitian(A):
    return adjoint(A) == A


def trace(A):
    """Ordinary trace, with values in D."""
    acc = A.kind.zero()
    for r in range(A.n):
        acc = acc + A.rows[r][r]
    return acc


def reduced_trace(A):
    """Trd with values in the centre: Q for real and quaternion kinds, Q(i) for complex."""
    if A.kind is Kind.QUATERNION:
        return 2 * sum((A.rows[r][r].a for r in range(A.n)), Fraction(0))
    return trace(A)


def star_embed(A):
    """The embedding M_n(H) -> M_2n(C), M1 + j*M2 |-> [[M1, -conj M2], [M2, conj M1]].

    Each entry q = a + bi + cj + dk is split as q = q1 + j*q2 with
    q1 = a + b*sqrt(-1) and q2 = c - d*sqrt(-1), i.e. i is identified with
    sqrt(-1) acting on the left factor (j*(c - d i) = cj + dk).
    """
    if A.kind is not Kind.QUATERNION:
        raise ShapeError("star_embed expects a quaternion matrix")
    n = A.n
    m1 = [[GaussRational(q.a, q.b) for q in row] for row in A.rows]
    m2 = [[GaussRational(q.c, -q.d) for q in row] for row in A.rows]
    rows = []
    for r in range(n):
        rows.append(tuple(m1[r]) + tuple(-z.conj() for z in m2[r]))
    for r in range(n):
        rows.append(tuple(m2[r]) + tuple(z.conj() for z in m1[r]))
    return Matrix._raw(Kind.COMPLEX, tuple(rows))


def star_pullback(C):
    """Inverse of :func:`star_embed` on its image; rejects matrices of the wrong block shape."""
    if C.kind is not Kind.COMPLEX or C.n % 2:
        raise ShapeError("star_pullback expects a complex matrix of even size")
    n = C.n // 2
    rows = []
    for r in range(n):
        row = []
        for s in range(n):
            z1, z2 = C.rows[r][s], C.rows[n + r][s]
            if C.rows[r][n + s] != -z2.conj() or C.rows[n + r][n + s] != z1.conj():
                raise ShapeError("matrix is not in the image of the star embedding")
            row.append(RatQuaternion(z1.re, z1.im, z2.re, -z2.im))
        rows.append(tuple(row))
    return Matrix._raw(Kind.QUATERNION, tuple(rows))


def _common_denominator(kind, rows):
    den = 1
    for row in rows:
        for x in row:
            for c in kind.components(x):
                den = lcm(den, c.denominator)
    return den


def _bareiss_inverse(A):
    # Fraction-free Gauss-Jordan on [B | I] where B = den*A has integral entries
    # (in Z or Z[i]); every division below is exact.
    kind, n = A.kind, A.n
    den = _common_denominator(kind, A.rows)
    zero, one = kind.zero(), kind.one()
    M = [[x * den for x in row] + [one if r == c else zero for c in range(n)]
         for r, row in enumerate(A.rows)]
    prev = one
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k]), None)
        if p is None:
            raise NotInvertible(f"matrix has rank < {n}")
        if p != k:
            M[k], M[p] = M[p], M[k]
        pivot = M[k][k]
        for i in range(n):
            if i == k:
                continue
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            M[i] = [(pivot * row_i[j] - mik * row_k[j]) / prev for j in range(2 * n)]
        prev = pivot
    return Matrix._raw(kind, tuple(
        tuple(M[r][n + c] * den / M[r][r] for c in range(n)) for r in range(n)))


def invert(A):
    """Exact two-sided inverse; raises NotInvertible when A is singular."""
    if A.kind is Kind.QUATERNION:
        return star_pullback(_bareiss_inverse(star_embed(A)))
    return _bareiss_inverse(A)


def to_vector(A):
    """Q-coordinates of A in the basis ``basis(kind, n)``."""
    kind = A.kind
    return [c for row in A.rows for x in row for c in kind.components(x)]


def from_vector(kind, n, vec):
    kind = Kind(kind)
    k = kind.dim
    if len(vec) != k * n * n:
        raise ShapeError("coordinate vector has the wrong length")
    it = iter(vec)
    rows = []
    for _ in range(n):
        rows.append(tuple(kind.from_components([next(it) for _ in range(k)])
                          for _ in range(n)))
    return Matrix._raw(kind, tuple(rows))


def basis(kind, n):
    """Canonical Q-basis E_{r,s}*u, ordered by (r, s, u) with u in the units of D."""
    kind = Kind(kind)
    return [unit_matrix(kind, n, r, s, u)
            for r in range(n) for s in range(n) for u in kind.units()]


def basis_labels(kind, n):
    kind = Kind(kind)
    return [(UNIT_NAMES[kind][t], r, s)
            for r in range(n) for s in range(n) for t in range(kind.dim)]


def qdim(kind, n):
    """dim_Q M_n(D)."""
    return Kind(kind).dim * n * n


class MatrixTuple(tuple):
    """A non-empty tuple of matrices sharing kind and size."""

    def __new__(cls, items):
        items = tuple(items)
        if not items:
            raise ShapeError("a matrix tuple needs at least one matrix")
        first = items[0]
        for M in items:
            if not isinstance(M, Matrix):
                raise ShapeError("tuple entries must be matrices")
            first._check(M)
        return super().__new__(cls, items)

    @property
    def kind(self):
        return self[0].kind

    @property
    def n(self):
        return self[0].n

"""Positive cones on (M_n(D), conjugate transpose).

Everything here rests on :func:`diagonalize_congruence`, an exact hermitian
Gaussian elimination producing P with adjoint(P) * H * P = diag(d).  The
diagonal gives the Sylvester signature, the PSD test and hermitian-square
factorizations.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .errors import BadCertificate, NotHermitian, NotInvertible, ShapeError
from .matrices import (Kind, Matrix, adjoint, diag, identity, invert, is_hermitian,
                       mat_mul, qdim, zeros)
from .sampling import random_matrix, random_psd, random_rational
from .scalars import real_part
from .verdict import Verdict


@dataclass(frozen=True)
class CongruenceCertificate:
    P: Matrix
    d: tuple

    def verify(self, H):
        """Check adjoint(P) * H * P == diag(d) with P invertible."""
        if self.P.kind is not H.kind or self.P.n != H.n or len(self.d) != H.n:
            return False
        if mat_mul(mat_mul(adjoint(self.P), H), self.P) != diag(H.kind, list(self.d)):
            return False
        try:
            invert(self.P)
        except NotInvertible:
            return False
        return True


@dataclass(frozen=True)
class SignatureResult:
    positives: int
    negatives: int
    zeros: int

    @property
    def signature(self):
        return self.positives - self.negatives


@dataclass(frozen=True)
class ExactFactor:
    """H = adjoint(b) * b with b over the same division algebra."""
    b: Matrix
    certificate: CongruenceCertificate


@dataclass(frozen=True)
class RealClosureFactor:
    """H is PSD, but some d_i is not a rational square; b exists over the real closure."""
    certificate: CongruenceCertificate


@dataclass(frozen=True)
class NotPSD:
    certificate: CongruenceCertificate


@dataclass(frozen=True)
class ConeCertificate:
    """z = p + sum u_i * sigma(x_i) * a * x_i with p PSD (certified) and u_i >= 0."""
    p: Matrix
    p_certificate: CongruenceCertificate
    terms: tuple = ()


def _require_hermitian(H):
    if not isinstance(H, Matrix):
        raise ShapeError("expected a Matrix")
    if not is_hermitian(H):
        raise NotHermitian("matrix is not equal to its adjoint")


def _add_column(W, P, src, dst, u):
    # congruence by E = I + u*E_{src,dst}: column dst += column src * u,
    # then row dst += conj(u) * row src
    n = len(W)
    for i in range(n):
        if W[i][src]:
            W[i][dst] = W[i][dst] + W[i][src] * u
        if P[i][src]:
            P[i][dst] = P[i][dst] + P[i][src] * u
    cu = u.conj() if hasattr(u, "conj") else u
    for j in range(n):
        if W[src][j]:
            W[dst][j] = W[dst][j] + cu * W[src][j]


def diagonalize_congruence(H, order=None):
    """Exact congruence diagonalization of a hermitian matrix.

    ``order`` is the sequence in which indices are used as pivots (default
    0..n-1).  A zero pivot at k with some nonzero H[k][j] is repaired by the
    congruence adding column j * u to column k, with u = conj(H[k][j]) or,
    if that leaves the pivot zero, u = -conj(H[k][j]).
    """
    _require_hermitian(H)
    kind, n = H.kind, H.n
    order = list(range(n)) if order is None else list(order)
    if sorted(order) != list(range(n)):
        raise ValueError("pivot order must be a permutation of range(n)")
    W = [list(row) for row in H.rows]
    P = [list(row) for row in identity(kind, n).rows]
    conj = kind.conj
    for pos, k in enumerate(order):
        rest = order[pos + 1:]
        if not W[k][k]:
            j = next((j for j in rest if W[k][j]), None)
            if j is None:
                continue
            h = W[k][j]
            for u in (conj(h), -conj(h)):
                hu = h * u
                if 2 * real_part(hu) + real_part(W[j][j]) * real_part(u * conj(u)):
                    break
            _add_column(W, P, j, k, u)
        pivot = real_part(W[k][k])
        for j in rest:
            if W[k][j]:
                _add_column(W, P, k, j, -(W[k][j] / pivot))
    d = tuple(real_part(W[i][i]) for i in range(n))
    return CongruenceCertificate(Matrix._raw(kind, tuple(tuple(r) for r in P)), d)


def signature(H, order=None):
    return signature_from(diagonalize_congruence(H, order))


def signature_from(cert):
    """Count the signs of the diagonal of a congruence certificate."""
    d = cert.d
    pos = sum(1 for x in d if x > 0)
    neg = sum(1 for x in d if x < 0)
    return SignatureResult(pos, neg, len(d) - pos - neg)


def is_psd(H):
    """Return ``(bool, certificate)``; PSD iff every diagonal entry is >= 0."""
    cert = diagonalize_congruence(H)
    return all(x >= 0 for x in cert.d), cert


def _rational_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def hermitian_square_certificate(H):
    """Write H = adjoint(b) * b exactly when possible.

    Returns ExactFactor when every d_i of the congruence certificate is a
    rational square, RealClosureFactor when H is PSD but some root is
    irrational, and NotPSD otherwise.
    """
    ok, cert = is_psd(H)
    if not ok:
        return NotPSD(cert)
    roots = [_rational_sqrt(x) for x in cert.d]
    if any(r is None for r in roots):
        return RealClosureFactor(cert)
    b = mat_mul(diag(H.kind, roots), invert(cert.P))
    return ExactFactor(b, cert)


def cone_membership_scaled(a, x):
    """Is x in a*PSD, the scaled cone on (M_n(D), Int(a) o adjoint)?"""
    y = mat_mul(invert(a), x)
    if not is_hermitian(y):
        return False
    return is_psd(y)[0]


def verify_cone_certificate(a, inv, z, cert):
    """Check z = p + sum u_i * inv(x_i) * a * x_i exactly, with p certified PSD.

    Raises BadCertificate when the certificate violates its shape contract
    (more than m + 1 terms, a negative coefficient, mismatched matrices).
    """
    kind, n = z.kind, z.n
    m = qdim(kind, n)
    terms = list(cert.terms)
    if len(terms) > m + 1:
        raise BadCertificate(f"terms: {len(terms)} terms exceed the bound m + 1 = {m + 1}")
    for idx, (u, x) in enumerate(terms):
        if Fraction(u) < 0:
            raise BadCertificate(f"terms[{idx}]: coefficient {u} is negative")
        if x.kind is not kind or x.n != n:
            raise BadCertificate(f"terms[{idx}]: matrix shape mismatch")
    for name, M in (("a", a), ("p", cert.p)):
        if M.kind is not kind or M.n != n:
            raise BadCertificate(f"{name}: matrix shape mismatch")
    if not is_hermitian(cert.p):
        return Verdict.failed("p: not hermitian")
    if not cert.p_certificate.verify(cert.p):
        return Verdict.failed("p_certificate: adjoint(P)*p*P != diag(d) or P singular")
    if any(x < 0 for x in cert.p_certificate.d):
        return Verdict.failed("p_certificate: negative diagonal entry")
    total = cert.p
    for u, x in terms:
        total = total + mat_mul(mat_mul(inv.apply(x), a), x) * Fraction(u)
    if total != z:
        return Verdict.failed("sum: p + sum u_i sigma(x_i) a x_i != z")
    return Verdict.passed()


@dataclass
class ConeAxiomReport:
    kind: Kind
    n: int
    samples: int
    seed: int
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def violated_axioms(self):
        return sorted({v["axiom"] for v in self.violations})


def sample_cone_axioms(kind, n, samples, seed, psd_test=None):
    """Sample the prepositive-cone axioms (P1)-(P5) for the PSD cone.

    ``psd_test`` replaces the membership test (default: :func:`is_psd`), which
    lets the harness be checked against a deliberately broken test.
    """
    kind = Kind(kind)
    if psd_test is None:
        psd_test = lambda H: is_psd(H)[0]  # noqa: E731
    rng = random.Random(seed)
    report = ConeAxiomReport(kind, n, samples, seed)

    def fail(axiom, **mats):
        report.violations.append({"axiom": axiom, **mats})

    if not psd_test(zeros(kind, n)) or not psd_test(identity(kind, n)):
        fail("P1", detail="0 or I not in the cone")
    for _ in range(samples):
        p = random_psd(rng, kind, n)
        q = random_psd(rng, kind, n)
        y = random_matrix(rng, kind, n)
        u = abs(random_rational(rng))
        if not psd_test(p):
            fail("P1", p=p, detail="hermitian square rejected")
        if not psd_test(p + q):
            fail("P2", p=p, q=q)
        if not psd_test(mat_mul(mat_mul(adjoint(y), p), y)):
            fail("P3", p=p, y=y)
        if not psd_test(p * u):
            fail("P4", p=p, u=u, detail="nonnegative multiple left the cone")
        if u and not p.is_zero() and psd_test(p * (-u)):
            fail("P4", p=p, u=-u, detail="negative multiple of a nonzero element accepted")
        if psd_test(p) and psd_test(-p) and not p.is_zero():
            fail("P5", p=p)
    return report

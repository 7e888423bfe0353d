"""JSON encodings of scalars, matrices, involutions and algebras.

Scalars are exact strings: a rational is "p" or "p/q", a Gaussian rational
[re, im] and a quaternion [a, b, c, d].  Plain JSON integers are accepted
on input for convenience; output always uses strings.
"""
from fractions import Fraction

from .cones import CongruenceCertificate
from .errors import ShapeError
from .involutions import Involution
from .matrices import Kind, Matrix
from .scalars import GaussRational, RatQuaternion, format_rational, rat
from .structure import StructureConstantAlgebra


def decode_rational(x):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ShapeError(f"expected a rational string, got {x!r}")
    try:
        return rat(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ShapeError(f"bad rational {x!r}") from None


def encode_scalar(x):
    if isinstance(x, GaussRational):
        return [format_rational(x.re), format_rational(x.im)]
    if isinstance(x, RatQuaternion):
        return [format_rational(c) for c in x.components()]
    return format_rational(Fraction(x))


def decode_scalar(x, kind):
    if isinstance(x, list):
        comps = [decode_rational(c) for c in x]
        if len(comps) == 2 and kind is not Kind.REAL:
            return kind.coerce(GaussRational(*comps))
        if len(comps) == 4 and kind is Kind.QUATERNION:
            return RatQuaternion(*comps)
        raise ShapeError(f"scalar {x!r} does not fit the {kind.value} kind")
    return kind.coerce(decode_rational(x))


def require(obj, key):
    if not isinstance(obj, dict):
        raise ShapeError(f"expected a JSON object, got {type(obj).__name__}")
    if key not in obj:
        raise ShapeError(f"missing field {key!r}")
    return obj[key]


def decode_matrix(obj):
    kind = Kind.parse(require(obj, "kind"))
    n = require(obj, "n")
    rows = require(obj, "entries")
    if not isinstance(n, int) or n < 1:
        raise ShapeError("n must be a positive integer")
    if not isinstance(rows, list) or len(rows) != n \
            or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise ShapeError(f"entries must be {n} rows of {n} scalars")
    return Matrix(kind, [[decode_scalar(x, kind) for x in row] for row in rows])


def encode_matrix(M):
    return {"kind": M.kind.value, "n": M.n,
            "entries": [[encode_scalar(x) for x in row] for row in M.rows]}


def decode_involution(obj):
    kind = Kind.parse(require(obj, "kind"))
    n = require(obj, "n")
    scale = obj.get("scale", "identity")
    if scale == "identity":
        return Involution(kind, n)
    a = decode_matrix(scale)
    if a.kind is not kind or a.n != n:
        raise ShapeError("scale does not match the involution's kind and size")
    return Involution(kind, n, a)


def encode_involution(inv):
    scale = "identity" if inv.is_standard else encode_matrix(inv.scale)
    return {"kind": inv.kind.value, "n": inv.n, "scale": scale}


def decode_algebra(obj):
    m = require(obj, "m")
    if not isinstance(m, int) or m < 1:
        raise ShapeError("m must be a positive integer")
    consts = require(obj, "constants")
    try:
        constants = [[[decode_rational(x) for x in c] for c in row] for row in consts]
        unit = [decode_rational(x) for x in require(obj, "unit")]
        inv = obj.get("involution")
        if inv is not None:
            inv = [[decode_rational(x) for x in row] for row in inv]
    except TypeError:
        raise ShapeError("constants, unit and involution must be nested arrays") from None
    return StructureConstantAlgebra(m, constants, unit, inv)


def encode_algebra(alg):
    out = {"m": alg.m,
           "constants": [[[format_rational(x) for x in c] for c in row] for row in alg.constants],
           "unit": [format_rational(x) for x in alg.unit]}
    if alg.involution_matrix is not None:
        out["involution"] = [[format_rational(x) for x in row] for row in alg.involution_matrix]
    return out


def encode_certificate(cert):
    return {"P": encode_matrix(cert.P), "d": [format_rational(x) for x in cert.d]}


def decode_certificate(obj):
    P = decode_matrix(require(obj, "P"))
    d = tuple(decode_rational(x) for x in require(obj, "d"))
    return CongruenceCertificate(P, d)


def encode_vector(vec):
    return [format_rational(x) for x in vec]

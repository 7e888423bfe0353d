"""Exact scalars for the three division algebras over Q.

``Rational`` is :class:`fractions.Fraction`.  ``GaussRational`` models
Q(sqrt(-1)) and ``RatQuaternion`` models the Hamilton quaternions (-1,-1)_Q
with the usual basis 1, i, j, k.  All values are immutable.
"""
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction


def rat(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, str, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussRational:
    """re + im * sqrt(-1) with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", rat(re))
        object.__setattr__(self, "im", rat(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GaussRational):
            return x
        return cls(x, 0)

    def components(self):
        return (self.re, self.im)

    def __add__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational(self.re * other.re - self.im * other.im,
                                 self.re * other.im + self.im * other.re)
        if isinstance(other, (int, Fraction)):
            return GaussRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def norm(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussRational(self.re / nrm, -self.im / nrm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRational(self.re / other, self.im / other)
        return self * GaussRational.coerce(other).inverse()

    def conj(self):
        return GaussRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRational({format_rational(self.re)}, {format_rational(self.im)})"


class RatQuaternion:
    """a + b*i + c*j + d*k with i^2 = j^2 = -1 and ij = -ji = k."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", rat(a))
        object.__setattr__(self, "b", rat(b))
        object.__setattr__(self, "c", rat(c))
        object.__setattr__(self, "d", rat(d))

    def __setattr__(self, name, value):
        raise AttributeError("RatQuaternion is immutable")

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RatQuaternion):
            return x
        return cls(x)

    def components(self):
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other):
        if isinstance(other, RatQuaternion):
            return RatQuaternion(self.a + other.a, self.b + other.b,
                                 self.c + other.c, self.d + other.d)
        if isinstance(other, (int, Fraction)):
            return RatQuaternion(self.a + other, self.b, self.c, self.d)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return RatQuaternion(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        if isinstance(other, RatQuaternion):
            return RatQuaternion(self.a - other.a, self.b - other.b,
                                 self.c - other.c, self.d - other.d)
        if isinstance(other, (int, Fraction)):
            return RatQuaternion(self.a - other, self.b, self.c, self.d)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatQuaternion):
            return quat_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return RatQuaternion(self.a * other, self.b * other,
                                 self.c * other, self.d * other)
        return NotImplemented

    def __rmul__(self, other):
        # scalars are central
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def norm(self):
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self):
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero")
        return RatQuaternion(self.a / nrm, -self.b / nrm, -self.c / nrm, -self.d / nrm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatQuaternion(self.a / other, self.b / other,
                                 self.c / other, self.d / other)
        return self * RatQuaternion.coerce(other).inverse()

    def conj(self):
        return RatQuaternion(self.a, -self.b, -self.c, -self.d)

    def __bool__(self):
        return bool(self.a) or bool(self.b) or bool(self.c) or bool(self.d)

    def __eq__(self, other):
        if isinstance(other, RatQuaternion):
            return (self.a == other.a and self.b == other.b
                    and self.c == other.c and self.d == other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.c == 0 and self.d == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if not (self.b or self.c or self.d):
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        parts = ", ".join(format_rational(x) for x in self.components())
        return f"RatQuaternion({parts})"


def quat_mul(p, q):
    """Hamilton product of two rational quaternions."""
    a1, b1, c1, d1 = p.a, p.b, p.c, p.d
    a2, b2, c2, d2 = q.a, q.b, q.c, q.d
    return RatQuaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def conj(x):
    """Canonical involution: identity on Q, complex/quaternion conjugation otherwise."""
    if isinstance(x, (GaussRational, RatQuaternion)):
        return x.conj()
    return rat(x)


def real_part(x):
    if isinstance(x, RatQuaternion):
        return x.a
    if isinstance(x, GaussRational):
        return x.re
    return rat(x)


I = RatQuaternion(0, 1, 0, 0)
J = RatQuaternion(0, 0, 1, 0)
K = RatQuaternion(0, 0, 0, 1)
SQRT_M1 = GaussRational(0, 1)

"""Exception types shared across the package."""


class AlgebraError(ValueError):
    """Base class for every error raised by csai."""


class ShapeError(AlgebraError):
    """Kind or dimension mismatch between operands."""


class NotInvertible(AlgebraError):
    pass


class NotHermitian(AlgebraError):
    pass


class InvolutionError(AlgebraError):
    """A scaling matrix fails the symmetric/invertible construction contract."""


class NoSolution(AlgebraError):
    pass


class InternalInconsistency(AlgebraError):
    pass


class BadCertificate(AlgebraError):
    pass


class Inconclusive(AlgebraError):
    """Raised when a randomized search exhausts without a certified answer."""

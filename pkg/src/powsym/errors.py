"""Exception types shared across the package."""


class PowsymError(Exception):
    """Base class for every error raised by this library."""


class MixedRings(PowsymError):
    """Operands belong to different coefficient rings."""


class DivisionByNonUnit(PowsymError):
    """Attempt to invert or divide by a non-invertible ring element."""


class MixedContext(PowsymError):
    """Polynomial operands disagree on variable count or coefficient ring."""


class NotDivisible(PowsymError):
    """Exact polynomial division has a non-zero remainder."""


class NotSymmetric(PowsymError):
    """Input polynomial is not invariant under variable permutations."""


class NonInvertible(PowsymError):
    """An integer required to be a unit is not invertible in the ring."""


class DivisionByZeroFraction(PowsymError):
    """Fraction with formally zero denominator."""


class DenominatorVanishes(PowsymError):
    """A formal denominator maps to the zero polynomial under substitution."""


class SingularBlock(PowsymError):
    """No usable pivot while reducing the leading block of a linear system."""


class InvalidRange(PowsymError):
    """Index arguments outside the range an operation supports."""


class UnsupportedRing(PowsymError):
    """The coefficient ring does not support the requested operation."""


class InsufficientTraces(PowsymError):
    """Trace sequence shorter than the horizon the reconstruction needs."""


class Indeterminate(PowsymError):
    """A coefficient of the characteristic polynomial cannot be recovered
    from the given traces (denominator vanishes and the pole is not
    removable)."""

    def __init__(self, k, message="", partial=None):
        self.k = k
        self.partial = partial
        super().__init__(message or f"e_{k} is not determined by the traces")

"""Exact coefficient domains: integers, rationals, and prime fields F_r.

Every other module does its coefficient arithmetic through a RingSpec.
Raw element representations are kept deliberately plain so the term
kernels can work on them directly:

    Z    -> int (arbitrary precision)
    Q    -> fractions.Fraction (always in lowest terms)
    F_r  -> int in [0, r)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByNonUnit, MixedRings, UnsupportedRing

INTEGERS = "Z"
RATIONALS = "Q"
PRIME_FIELD = "F"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RingSpec:
    """A coefficient domain: Z, Q, or a prime field F_r."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in (INTEGERS, RATIONALS, PRIME_FIELD):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == PRIME_FIELD:
            if self.modulus is None or self.modulus < 2:
                raise ValueError("prime field needs a modulus >= 2")
            if not is_prime(self.modulus):
                raise ValueError(f"modulus {self.modulus} is not prime")
        elif self.modulus is not None:
            raise ValueError(f"{self.kind} takes no modulus")

    # -- constructors -------------------------------------------------

    @staticmethod
    def integers() -> "RingSpec":
        return RingSpec(INTEGERS)

    @staticmethod
    def rationals() -> "RingSpec":
        return RingSpec(RATIONALS)

    @staticmethod
    def prime_field(r: int) -> "RingSpec":
        return RingSpec(PRIME_FIELD, r)

    @staticmethod
    def parse(text: str) -> "RingSpec":
        """Parse "Z", "Q", or "F<prime>" (e.g. "F101")."""
        t = text.strip()
        if t == "Z":
            return RingSpec.integers()
        if t == "Q":
            return RingSpec.rationals()
        if t.startswith("F") and t[1:].isdigit():
            return RingSpec.prime_field(int(t[1:]))
        raise ValueError(f"cannot parse ring spec {text!r}")

    def __str__(self):
        if self.kind == PRIME_FIELD:
            return f"F{self.modulus}"
        return self.kind

    # -- structural queries -------------------------------------------

    @property
    def is_field(self) -> bool:
        return self.kind in (RATIONALS, PRIME_FIELD)

    def characteristic(self) -> int:
        return self.modulus if self.kind == PRIME_FIELD else 0

    def r0(self) -> int:
        """Smallest positive integer that is not a unit in this ring."""
        if self.kind == PRIME_FIELD:
            return self.modulus
        if self.kind == INTEGERS:
            return 2
        raise UnsupportedRing("every positive integer is invertible in Q")

    def is_invertible_int(self, k: int) -> bool:
        if k < 1:
            raise ValueError("k must be a positive integer")
        if self.kind == RATIONALS:
            return True
        if self.kind == INTEGERS:
            return k == 1
        return k % self.modulus != 0

    @property
    def kernel_mod(self) -> int:
        """Coefficient mode for the term kernels.

        > 0   prime field, ints reduced mod the value
        == 0  exact integer domain
        == -1 exact field of fractions
        """
        if self.kind == PRIME_FIELD:
            return self.modulus
        return 0 if self.kind == INTEGERS else -1

    # -- raw element arithmetic ---------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    def from_int(self, n: int):
        """Image of an integer in this ring."""
        if self.kind == PRIME_FIELD:
            return n % self.modulus
        if self.kind == RATIONALS:
            return Fraction(n)
        return n

    def coerce(self, value):
        """Canonical raw representation of ``value`` in this ring."""
        if isinstance(value, Coeff):
            if value.spec != self:
                raise MixedRings(f"{value.spec} element used in {self}")
            return value.value
        if isinstance(value, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            if self.kind == RATIONALS:
                return value
            if value.denominator == 1:
                return self.from_int(value.numerator)
            raise MixedRings(f"non-integral rational in {self}")
        if isinstance(value, str):
            return self.from_str(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def add(self, a, b):
        return (a + b) % self.modulus if self.kind == PRIME_FIELD else a + b

    def sub(self, a, b):
        return (a - b) % self.modulus if self.kind == PRIME_FIELD else a - b

    def mul(self, a, b):
        return (a * b) % self.modulus if self.kind == PRIME_FIELD else a * b

    def neg(self, a):
        return (-a) % self.modulus if self.kind == PRIME_FIELD else -a

    def is_unit(self, a) -> bool:
        if self.kind == INTEGERS:
            return a in (1, -1)
        return a != self.zero

    def inv(self, a):
        if not self.is_unit(a):
            raise DivisionByNonUnit(f"{self.to_str(a)} is not a unit in {self}")
        if self.kind == PRIME_FIELD:
            return pow(a, -1, self.modulus)
        if self.kind == RATIONALS:
            return 1 / a
        return a  # 1 or -1

    def div(self, a, b):
        """Exact division; the divisor must be a unit (over Z the exact
        -multiple case is also allowed, which content removal needs)."""
        if b == self.zero:
            raise DivisionByNonUnit(f"division by zero in {self}")
        if self.kind == PRIME_FIELD:
            return a * pow(b, -1, self.modulus) % self.modulus
        if self.kind == RATIONALS:
            return a / b
        q, r = divmod(a, b)
        if r:
            raise DivisionByNonUnit(f"{a} is not an exact multiple of {b} in Z")
        return q

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.kind == PRIME_FIELD:
            return pow(a, e, self.modulus)
        return a**e

    # -- text form ------------------------------------------------------

    def to_str(self, a) -> str:
        return str(a)

    def from_str(self, text: str):
        t = text.strip()
        if self.kind == RATIONALS:
            return Fraction(t)
        if "/" in t:
            raise ValueError(f"{text!r} is not an element of {self}")
        return self.from_int(int(t))


@dataclass(frozen=True)
class Coeff:
    """An exact element of a RingSpec, kept in canonical form."""

    spec: RingSpec
    value: object

    @staticmethod
    def of(spec: RingSpec, value) -> "Coeff":
        return Coeff(spec, spec.coerce(value))

    def _raw(self, other):
        if isinstance(other, Coeff):
            if other.spec != self.spec:
                raise MixedRings(f"cannot mix {self.spec} and {other.spec}")
            return other.value
        return self.spec.coerce(other)

    @property
    def is_zero(self) -> bool:
        return self.value == self.spec.zero

    def __add__(self, other):
        return Coeff(self.spec, self.spec.add(self.value, self._raw(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Coeff(self.spec, self.spec.sub(self.value, self._raw(other)))

    def __rsub__(self, other):
        return Coeff(self.spec, self.spec.sub(self._raw(other), self.value))

    def __mul__(self, other):
        return Coeff(self.spec, self.spec.mul(self.value, self._raw(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Coeff(self.spec, self.spec.neg(self.value))

    def __truediv__(self, other):
        return Coeff(self.spec, self.spec.div(self.value, self._raw(other)))

    def __rtruediv__(self, other):
        return Coeff(self.spec, self.spec.div(self._raw(other), self.value))

    def __pow__(self, e: int):
        return Coeff(self.spec, self.spec.pow(self.value, e))

    def inv(self) -> "Coeff":
        return Coeff(self.spec, self.spec.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Coeff):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.spec.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def __str__(self):
        return self.spec.to_str(self.value)

    def __repr__(self):
        return f"Coeff({self.spec}, {self.value})"

    def serialize(self) -> str:
        return self.spec.to_str(self.value)

    @staticmethod
    def parse(spec: RingSpec, text: str) -> "Coeff":
        return Coeff(spec, spec.from_str(text))


def is_invertible_int(k: int, spec: RingSpec) -> bool:
    """True iff the image of the positive integer k is a unit in the ring."""
    return spec.is_invertible_int(k)


ZZ = RingSpec.integers()
QQ = RingSpec.rationals()


def GF(r: int) -> RingSpec:
    return RingSpec.prime_field(r)

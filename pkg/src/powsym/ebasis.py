"""Symmetric polynomials written in the basis of elementary generators.

An EExpansion is a finite sum  sum_lambda c_lambda * e_lambda  indexed by
integer partitions with parts <= n (any product involving e_k for k > n
is zero and is normalized away eagerly).  Because e_1..e_n are
algebraically independent, expansion into concrete polynomials is
injective, which makes this the coordinate system of choice for all
brute-force verification work.

Conversions provided here:

  decompose          concrete symmetric MPoly -> e-basis (leading-term
                     subtraction, the constructive classical algorithm)
  p_to_e_recursive   power sum p_m via the Newton recursion
  p_to_e_closed      power sum p_m via the closed multinomial formula
  h_to_e             complete homogeneous h_k via the e/h recursion
"""

from __future__ import annotations

import json as _json
from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial, gcd

from . import _accel, partitions as pt
from .errors import NonInvertible, NotSymmetric
from .multipoly import MPoly, complete_homogeneous, elementary, power_sum
from .rings import Coeff, RingSpec


class EExpansion:
    """Immutable partition-indexed expansion over e_1..e_n."""

    __slots__ = ("n", "spec", "terms")

    def __init__(self, n: int, spec: RingSpec, terms: dict | None = None):
        if n < 1:
            raise ValueError("variable count must be >= 1")
        self.n = n
        self.spec = spec
        if terms is None:
            terms = {}
        else:
            terms = {
                k: v for k, v in terms.items() if (not k or k[0] <= n) and v != spec.zero
            }
        self.terms = terms

    # -- constructors -----------------------------------------------

    @staticmethod
    def zero(n: int, spec: RingSpec) -> "EExpansion":
        return EExpansion(n, spec)

    @staticmethod
    def constant(c, n: int, spec: RingSpec) -> "EExpansion":
        raw = spec.coerce(c)
        if raw == spec.zero:
            return EExpansion(n, spec)
        return EExpansion(n, spec, {(): raw})

    @staticmethod
    def one(n: int, spec: RingSpec) -> "EExpansion":
        return EExpansion.constant(1, n, spec)

    @staticmethod
    def generator(k: int, n: int, spec: RingSpec) -> "EExpansion":
        """The single generator e_k (zero when k > n)."""
        if k < 0:
            raise ValueError("k must be >= 0")
        if k == 0:
            return EExpansion.one(n, spec)
        return EExpansion(n, spec, {(k,): spec.one})

    @staticmethod
    def from_terms(mapping: dict, n: int, spec: RingSpec) -> "EExpansion":
        terms: dict = {}
        for parts, c in mapping.items():
            parts = pt.normalized(parts)
            raw = spec.coerce(c)
            if parts in terms:
                raw = spec.add(terms[parts], raw)
            if raw == spec.zero:
                terms.pop(parts, None)
            else:
                terms[parts] = raw
        return EExpansion(n, spec, terms)

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        weights = {pt.weight(k) for k in self.terms}
        return len(weights) <= 1

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(pt.weight(k) for k in self.terms)

    def coefficient(self, parts) -> Coeff:
        return Coeff(self.spec, self.terms.get(pt.normalized(parts), self.spec.zero))

    def sorted_terms(self) -> list:
        keys = sorted(self.terms, key=pt.grade_key, reverse=True)
        return [(k, Coeff(self.spec, self.terms[k])) for k in keys]

    def support(self) -> list:
        return sorted(self.terms, key=pt.grade_key, reverse=True)

    def _check(self, other: "EExpansion"):
        if self.n != other.n or self.spec != other.spec:
            raise ValueError("mixed e-basis contexts")

    def _coerce_operand(self, other):
        if isinstance(other, EExpansion):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Coeff)):
            return EExpansion.constant(other, self.n, self.spec)
        return None

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        terms = _accel.kernel.add_scaled(
            self.terms, other.terms, self.spec.one, self.spec.kernel_mod)
        return EExpansion(self.n, self.spec, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        terms = _accel.kernel.add_scaled(
            self.terms, other.terms, self.spec.from_int(-1), self.spec.kernel_mod)
        return EExpansion(self.n, self.spec, terms)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        terms = _accel.kernel.add_scaled(
            {}, self.terms, self.spec.from_int(-1), self.spec.kernel_mod)
        return EExpansion(self.n, self.spec, terms)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Coeff)):
            raw = self.spec.coerce(other)
            terms = _accel.kernel.add_scaled({}, self.terms, raw, self.spec.kernel_mod)
            return EExpansion(self.n, self.spec, terms)
        if not isinstance(other, EExpansion):
            return NotImplemented
        self._check(other)
        terms = _accel.kernel.mul_parts(
            self.terms, other.terms, self.spec.kernel_mod, self.n)
        return EExpansion(self.n, self.spec, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = EExpansion.one(self.n, self.spec)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Coeff)):
            other = EExpansion.constant(other, self.n, self.spec)
        if not isinstance(other, EExpansion):
            return NotImplemented
        return (self.n, self.spec, self.terms) == (other.n, other.spec, other.terms)

    __hash__ = None

    # -- text and serialization ---------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for parts, c in self.sorted_terms():
            body = pt.render_product(parts, "e")
            cs = str(c)
            if not parts:
                out.append(cs)
            elif cs == "1":
                out.append(body)
            elif cs == "-1":
                out.append(f"-{body}")
            else:
                out.append(f"{cs}*{body}")
        return " + ".join(out).replace("+ -", "- ")

    def __repr__(self):
        return f"EExpansion({self})"

    def latex(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for parts, c in self.sorted_terms():
            body = pt.render_latex(parts, "e")
            cs = str(c)
            if not parts:
                out.append(cs)
            elif cs == "1":
                out.append(body)
            elif cs == "-1":
                out.append(f"-{body}")
            else:
                out.append(f"{cs} {body}")
        return " + ".join(out).replace("+ -", "- ")

    def to_json(self) -> dict:
        terms = [
            {"partition": list(k), "coeff": c.serialize()}
            for k, c in self.sorted_terms()
        ]
        return {"n": self.n, "ring": str(self.spec), "terms": terms}

    @staticmethod
    def from_json(data) -> "EExpansion":
        if isinstance(data, str):
            data = _json.loads(data)
        spec = RingSpec.parse(data["ring"])
        mapping = {
            tuple(t["partition"]): spec.from_str(t["coeff"]) for t in data["terms"]
        }
        return EExpansion.from_terms(mapping, data["n"], spec)


# -- expansion and decomposition ------------------------------------------


def expand(g: EExpansion) -> MPoly:
    """Multiply out every e_lambda into the concrete polynomial ring."""
    acc = MPoly.zero(g.n, g.spec)
    for parts, c in g.terms.items():
        prod = _expand_partition(parts, g.n, g.spec)
        acc = acc + prod * c
    return acc


@lru_cache(maxsize=None)
def _expand_partition(parts: tuple, n: int, spec: RingSpec) -> MPoly:
    if not parts:
        return MPoly.one(n, spec)
    smaller = _expand_partition(parts[1:], n, spec)
    return elementary(parts[0], n, spec) * smaller


def decompose(f: MPoly) -> EExpansion:
    """Write a symmetric polynomial in the e-basis.

    Classical leading-term subtraction: the graded-lex leading exponent
    of a symmetric polynomial is weakly decreasing, and the conjugate of
    that exponent vector names the unique e_lambda with the same leading
    monomial (with coefficient 1)."""
    if not f.is_symmetric():
        raise NotSymmetric("input is not invariant under variable swaps")
    n, spec = f.n, f.spec
    acc: dict = {}
    rem = f
    while not rem.is_zero:
        exp = rem.leading_monomial()
        if any(exp[i] < exp[i + 1] for i in range(n - 1)):
            raise NotSymmetric("leading exponent not weakly decreasing")
        trimmed = tuple(e for e in exp if e)
        lam = pt.conjugate(trimmed)
        c = rem.terms[exp]
        acc[lam] = c
        rem = rem - _expand_partition(lam, n, spec) * c
    return EExpansion(n, spec, acc)


# -- Newton conversions ------------------------------------------------------


@lru_cache(maxsize=None)
def p_to_e_recursive(m: int, n: int, spec: RingSpec) -> EExpansion:
    """Power sum p_m in the e-basis via the Newton recursion

        p_m = (-1)^(m-1) m e_m + sum_{i=1}^{m-1} (-1)^(m-1-i) e_{m-i} p_i.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return EExpansion.generator(1, n, spec)
    sign = 1 if (m - 1) % 2 == 0 else -1
    acc = EExpansion.generator(m, n, spec) * spec.from_int(sign * m)
    for i in range(1, m):
        sign = 1 if (m - 1 - i) % 2 == 0 else -1
        term = EExpansion.generator(m - i, n, spec) * p_to_e_recursive(i, n, spec)
        acc = acc + term * spec.from_int(sign)
    return acc


@lru_cache(maxsize=None)
def p_to_e_closed(m: int, n: int, spec: RingSpec) -> EExpansion:
    """Power sum p_m in the e-basis via the closed form

        p_m = (-1)^m sum_{t_1 + 2 t_2 + ... + m t_m = m}
              c_t prod_i (-e_i)^(t_i),
        c_t = m (t_1 + ... + t_m - 1)! / (t_1! ... t_m!).

    The c_t are integers; they are computed exactly in Z and then mapped
    into the coefficient ring, so the formula is valid in any
    characteristic."""
    if m < 1:
        raise ValueError("m must be >= 1")
    terms: dict = {}
    for lam in pt.partitions(m):
        if lam[0] > n:
            continue
        mults = pt.multiplicities(lam)
        length = len(lam)
        num = m * factorial(length - 1)
        den = 1
        for t in mults.values():
            den *= factorial(t)
        c, r = divmod(num, den)
        if r:
            raise ArithmeticError(f"non-integral multinomial weight at {lam}")
        sign = 1 if (m + length) % 2 == 0 else -1
        raw = spec.from_int(sign * c)
        if raw != spec.zero:
            terms[lam] = raw
    return EExpansion(n, spec, terms)


def p_to_e(m: int, n: int, spec: RingSpec) -> EExpansion:
    """Default power-sum conversion (the recursion)."""
    return p_to_e_recursive(m, n, spec)


def p_product_to_e(parts: tuple, n: int, spec: RingSpec) -> EExpansion:
    """e-basis expansion of the product p_lambda."""
    factors = [p_to_e(p, n, spec) for p in pt.normalized(parts)]
    return reduce(lambda a, b: a * b, factors, EExpansion.one(n, spec))


@lru_cache(maxsize=None)
def h_to_e(k: int, n: int, spec: RingSpec) -> EExpansion:
    """Complete homogeneous h_k in the e-basis via

        h_k = sum_{i=1}^{k} (-1)^(i-1) e_i h_{k-i},  h_0 = 1.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return EExpansion.one(n, spec)
    acc = EExpansion.zero(n, spec)
    for i in range(1, k + 1):
        sign = 1 if (i - 1) % 2 == 0 else -1
        term = EExpansion.generator(i, n, spec) * h_to_e(k - i, n, spec)
        acc = acc + term * spec.from_int(sign)
    return acc


def newton_e_from_p_invertible(
    k: int, n: int, spec: RingSpec, lower_e: list | None = None
) -> EExpansion:
    """e_k from the Newton identity  k e_k = sum (-1)^(i-1) e_{k-i} p_i,
    requiring k to be a unit in the ring.

    lower_e optionally supplies e_0..e_{k-1} (EExpansion or constants);
    by default the canonical generators are used, in which case the
    result collapses back to the generator e_k itself."""
    if not spec.is_invertible_int(k):
        raise NonInvertible(f"{k} is not invertible in {spec}")
    if lower_e is None:
        lower = [EExpansion.generator(i, n, spec) for i in range(k)]
    else:
        if len(lower_e) != k:
            raise ValueError(f"lower_e must list e_0..e_{k - 1}")
        lower = [
            v if isinstance(v, EExpansion) else EExpansion.constant(v, n, spec)
            for v in lower_e
        ]
    acc = EExpansion.zero(n, spec)
    for i in range(1, k + 1):
        sign = 1 if (i - 1) % 2 == 0 else -1
        acc = acc + lower[k - i] * p_to_e(i, n, spec) * spec.from_int(sign)
    kinv = spec.inv(spec.from_int(k))
    return acc * kinv


def newton_e_determinant(k: int, n: int, spec: RingSpec) -> EExpansion:
    """e_k as 1/k! times the determinant of the classical Newton matrix

        [ p_1   1                 ]
        [ p_2   p_1   2           ]
        [ ...         ...         ]
        [ p_k   p_{k-1} ...  p_1  ]

    valid whenever k! is invertible; must agree with the identity route."""
    for j in range(2, k + 1):
        if not spec.is_invertible_int(j):
            raise NonInvertible(f"{j}! is not invertible in {spec}")
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            if j <= i:
                row.append(p_to_e(i - j + 1, n, spec))
            elif j == i + 1:
                row.append(EExpansion.constant(i, n, spec))
            else:
                row.append(EExpansion.zero(n, spec))
        rows.append(row)
    det = _e_det(rows, k, n, spec)
    fact_inv = spec.one
    for j in range(2, k + 1):
        fact_inv = spec.mul(fact_inv, spec.inv(spec.from_int(j)))
    return det * fact_inv


def _e_det(rows, d, n, spec) -> EExpansion:
    if d == 1:
        return rows[0][0]
    acc = EExpansion.zero(n, spec)
    for j in range(d):
        entry = rows[0][j]
        if entry.is_zero:
            continue
        minor = [[rows[i][jj] for jj in range(d) if jj != j] for i in range(1, d)]
        sub = entry * _e_det(minor, d - 1, n, spec)
        acc = acc + sub if j % 2 == 0 else acc - sub
    return acc


def frobenius_reduce_index(m: int, r: int) -> tuple[int, int]:
    """Split m = k * r^v with r coprime to k; returns (k, r^v)."""
    v = 1
    while m % r == 0:
        m //= r
        v *= r
    return m, v


def support_has_coprime_part(g: EExpansion, r: int) -> bool:
    """True iff every partition in the support has a part coprime to r."""
    for parts in g.terms:
        if not any(gcd(p, r) == 1 for p in parts):
            return False
    return True

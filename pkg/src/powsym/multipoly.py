"""Sparse multivariate polynomials in x_1..x_n over an exact coefficient ring.

Monomials are exponent tuples of fixed length n, compared in graded
lexicographic order (total degree first, then lexicographic on the
exponent vector).  Term dictionaries never store zero coefficients, so
structural equality is mathematical equality.

Also home to the three classical symmetric families -- elementary e_k,
power sums p_k, complete homogeneous h_k -- and an exact determinant for
matrices of polynomials (cofactor expansion for small sizes, Bareiss
fraction-free elimination beyond).
"""

from __future__ import annotations

import json as _json
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from . import _accel
from .errors import MixedContext, NotDivisible
from .rings import Coeff, RingSpec

Monomial = tuple  # exponent vector of length n


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_key(m: Monomial):
    """Graded-lex sort key; max() over keys picks the leading monomial."""
    return (sum(m), m)


class MPoly:
    """Immutable sparse polynomial.  Do not mutate ``terms``."""

    __slots__ = ("n", "spec", "terms")

    def __init__(self, n: int, spec: RingSpec, terms: dict | None = None):
        if n < 1:
            raise ValueError("variable count must be >= 1")
        self.n = n
        self.spec = spec
        self.terms = terms if terms is not None else {}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(n: int, spec: RingSpec) -> "MPoly":
        return MPoly(n, spec)

    @staticmethod
    def constant(c, n: int, spec: RingSpec) -> "MPoly":
        raw = spec.coerce(c)
        if raw == spec.zero:
            return MPoly(n, spec)
        return MPoly(n, spec, {(0,) * n: raw})

    @staticmethod
    def one(n: int, spec: RingSpec) -> "MPoly":
        return MPoly.constant(1, n, spec)

    @staticmethod
    def variable(i: int, n: int, spec: RingSpec) -> "MPoly":
        """x_i with 1-based index."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        exp = [0] * n
        exp[i - 1] = 1
        return MPoly(n, spec, {tuple(exp): spec.one})

    @staticmethod
    def from_terms(mapping: dict, n: int, spec: RingSpec) -> "MPoly":
        terms = {}
        for exp, c in mapping.items():
            exp = tuple(exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for n={n}")
            raw = spec.coerce(c)
            if raw != spec.zero:
                terms[exp] = spec.add(terms[exp], raw) if exp in terms else raw
                if terms[exp] == spec.zero:
                    del terms[exp]
        return MPoly(n, spec, terms)

    # -- basic structure -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(k) for k in self.terms)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=monomial_key)

    def leading_coeff(self) -> Coeff:
        return Coeff(self.spec, self.terms[self.leading_monomial()])

    def coefficient(self, exp) -> Coeff:
        return Coeff(self.spec, self.terms.get(tuple(exp), self.spec.zero))

    def sorted_terms(self) -> list:
        """(monomial, Coeff) pairs, leading term first."""
        keys = sorted(self.terms, key=monomial_key, reverse=True)
        return [(k, Coeff(self.spec, self.terms[k])) for k in keys]

    def _check(self, other: "MPoly"):
        if self.n != other.n or self.spec != other.spec:
            raise MixedContext(
                f"operands disagree: ({self.n} vars, {self.spec}) vs "
                f"({other.n} vars, {other.spec})")

    def _coerce_operand(self, other):
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Coeff)):
            return MPoly.constant(other, self.n, self.spec)
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        terms = _accel.kernel.add_scaled(
            self.terms, other.terms, self.spec.one, self.spec.kernel_mod)
        return MPoly(self.n, self.spec, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        terms = _accel.kernel.add_scaled(
            self.terms, other.terms, self.spec.from_int(-1), self.spec.kernel_mod)
        return MPoly(self.n, self.spec, terms)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        terms = _accel.kernel.add_scaled(
            {}, self.terms, self.spec.from_int(-1), self.spec.kernel_mod)
        return MPoly(self.n, self.spec, terms)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Coeff)):
            raw = self.spec.coerce(other)
            terms = _accel.kernel.add_scaled({}, self.terms, raw, self.spec.kernel_mod)
            return MPoly(self.n, self.spec, terms)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        terms = _accel.kernel.mul_expvec(self.terms, other.terms, self.spec.kernel_mod)
        return MPoly(self.n, self.spec, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = MPoly.one(self.n, self.spec)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def exact_divide(self, other: "MPoly") -> "MPoly":
        """Quotient self/other; raises NotDivisible when the division is
        not exact in the polynomial ring."""
        other = self._coerce_operand(other)
        if other is None or other.is_zero:
            raise NotDivisible("division by zero polynomial")
        q = _accel.kernel.exact_div_expvec(
            self.terms, other.terms, self.spec.kernel_mod)
        if q is None:
            raise NotDivisible("polynomial division is not exact")
        return MPoly(self.n, self.spec, q)

    # -- structural operations ---------------------------------------------

    def drop_variable(self, k: int) -> "MPoly":
        """Substitute x_k := 0 (1-based).  For the power sums and other
        monomial families vanishing at 0 this equals evaluation at all
        variables except x_k; it is not a general partial evaluation."""
        if not 1 <= k <= self.n:
            raise ValueError(f"variable index {k} out of range 1..{self.n}")
        i = k - 1
        terms = {exp: c for exp, c in self.terms.items() if exp[i] == 0}
        return MPoly(self.n, self.spec, dict(terms))

    def embed(self, n_new: int, positions: list[int]) -> "MPoly":
        """Reinterpret variable j as x_{positions[j-1]} of an n_new-variable
        ring (positions are 1-based and distinct)."""
        if len(positions) != self.n or len(set(positions)) != self.n:
            raise ValueError("positions must list a distinct target per variable")
        if any(not 1 <= p <= n_new for p in positions):
            raise ValueError("positions out of range")
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * n_new
            for j, e in enumerate(exp):
                new[positions[j] - 1] = e
            terms[tuple(new)] = c
        return MPoly(n_new, self.spec, terms)

    def evaluate(self, values) -> Coeff:
        """Evaluate at a point (sequence of n ring elements)."""
        vals = [self.spec.coerce(v) for v in values]
        if len(vals) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(vals)}")
        spec = self.spec
        acc = spec.zero
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(vals, exp):
                if e:
                    term = spec.mul(term, spec.pow(v, e))
            acc = spec.add(acc, term)
        return Coeff(spec, acc)

    def swap_variables(self, i: int, j: int) -> "MPoly":
        """Exchange x_i and x_j (1-based)."""
        a, b = i - 1, j - 1
        terms = {}
        for exp, c in self.terms.items():
            lst = list(exp)
            lst[a], lst[b] = lst[b], lst[a]
            terms[tuple(lst)] = c
        return MPoly(self.n, self.spec, terms)

    def is_symmetric(self) -> bool:
        """Invariance under all adjacent transpositions (hence under S_n)."""
        for i in range(1, self.n):
            if self.swap_variables(i, i + 1).terms != self.terms:
                return False
        return True

    # -- comparison and text -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Coeff)):
            other = MPoly.constant(other, self.n, self.spec)
        if not isinstance(other, MPoly):
            return NotImplemented
        return (self.n, self.spec, self.terms) == (other.n, other.spec, other.terms)

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = [
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exp) if e
            ]
            body = "*".join(factors)
            cs = str(c)
            if not factors:
                parts.append(cs)
            elif cs == "1":
                parts.append(body)
            elif cs == "-1":
                parts.append(f"-{body}")
            else:
                parts.append(f"{cs}*{body}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"MPoly({self})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        terms = [
            {"exp": list(k), "coeff": c.serialize()} for k, c in self.sorted_terms()
        ]
        return {"n": self.n, "ring": str(self.spec), "terms": terms}

    @staticmethod
    def from_json(data) -> "MPoly":
        if isinstance(data, str):
            data = _json.loads(data)
        spec = RingSpec.parse(data["ring"])
        mapping = {tuple(t["exp"]): spec.from_str(t["coeff"]) for t in data["terms"]}
        return MPoly.from_terms(mapping, data["n"], spec)


# -- symmetric families -------------------------------------------------


@lru_cache(maxsize=None)
def elementary(k: int, n: int, spec: RingSpec) -> MPoly:
    """e_k(x_1..x_n): the sum over all k-element subsets; e_0 = 1 and
    e_k = 0 for k > n."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return MPoly.one(n, spec)
    if k > n:
        return MPoly.zero(n, spec)
    terms = {}
    for subset in combinations(range(n), k):
        exp = [0] * n
        for i in subset:
            exp[i] = 1
        terms[tuple(exp)] = spec.one
    return MPoly(n, spec, terms)


@lru_cache(maxsize=None)
def power_sum(k: int, n: int, spec: RingSpec) -> MPoly:
    """p_k(x_1..x_n) = sum x_i^k; p_0 is the image of n in the ring."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return MPoly.constant(n, n, spec)
    terms = {}
    for i in range(n):
        exp = [0] * n
        exp[i] = k
        terms[tuple(exp)] = spec.one
    return MPoly(n, spec, terms)


@lru_cache(maxsize=None)
def complete_homogeneous(k: int, n: int, spec: RingSpec) -> MPoly:
    """h_k(x_1..x_n): the sum of all degree-k monomials; h_0 = 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return MPoly.one(n, spec)
    terms = {}
    for combo in combinations_with_replacement(range(n), k):
        exp = [0] * n
        for i in combo:
            exp[i] += 1
        exp = tuple(exp)
        terms[exp] = spec.add(terms[exp], spec.one) if exp in terms else spec.one
    return MPoly(n, spec, {k_: v for k_, v in terms.items() if v != spec.zero})


# -- determinants of polynomial matrices -----------------------------------

# expansion by minors (memoized over column subsets) keeps every product
# of the form entry * minor; for the power-sum matrices the entries are
# tiny, which beats fraction-free elimination by a wide margin up to
# this size
_COFACTOR_LIMIT = 6


def _check_matrix(rows) -> tuple[int, MPoly]:
    d = len(rows)
    if d == 0 or any(len(r) != d for r in rows):
        raise ValueError("determinant needs a non-empty square matrix")
    first = rows[0][0]
    for r in rows:
        for entry in r:
            if not isinstance(entry, MPoly):
                raise MixedContext("matrix entries must be MPoly")
            first._check(entry)
    return d, first


def _det_cofactor(rows, d: int, zero: MPoly) -> MPoly:
    """Expansion along the first remaining row, minors memoized by the
    bitmask of still-active columns (row index is implied)."""
    one = MPoly.one(zero.n, zero.spec)
    memo = {0: one}

    def minor(mask: int) -> MPoly:
        got = memo.get(mask)
        if got is not None:
            return got
        r = d - bin(mask).count("1")
        acc = zero
        sign = 1
        m = mask
        while m:
            low = m & -m
            j = low.bit_length() - 1
            entry = rows[r][j]
            if not entry.is_zero:
                sub = entry * minor(mask & ~low)
                acc = acc + sub if sign > 0 else acc - sub
            sign = -sign
            m &= m - 1
        memo[mask] = acc
        return acc

    return minor((1 << d) - 1)


def _det_bareiss(rows, d: int, zero: MPoly) -> MPoly:
    """One-step fraction-free elimination; all divisions are exact."""
    m = [list(r) for r in rows]
    sign = 1
    prev = None
    for p in range(d - 1):
        if m[p][p].is_zero:
            for i in range(p + 1, d):
                if not m[i][p].is_zero:
                    m[p], m[i] = m[i], m[p]
                    sign = -sign
                    break
            else:
                return zero
        piv = m[p][p]
        for i in range(p + 1, d):
            for j in range(p + 1, d):
                t = piv * m[i][j] - m[i][p] * m[p][j]
                m[i][j] = t if prev is None else t.exact_divide(prev)
            m[i][p] = zero
        prev = piv
    det = m[d - 1][d - 1]
    return det if sign > 0 else -det


def determinant(rows) -> MPoly:
    """Exact determinant of a square matrix of MPoly values."""
    d, first = _check_matrix(rows)
    zero = MPoly.zero(first.n, first.spec)
    if d <= _COFACTOR_LIMIT:
        return _det_cofactor(rows, d, zero)
    return _det_bareiss(rows, d, zero)

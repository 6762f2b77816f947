"""Polynomials and fractions in formal power-sum symbols P_1, P_2, ...

PPoly treats the symbols as algebraically independent: no relation (in
particular no characteristic-r Frobenius identity) is applied unless a
substitution is requested explicitly.  Monomials are partitions: the
key (3, 1, 1) is the formal product P_3*P_1^2.

PRat is a normalized quotient of two PPoly values.  Normalization is
deliberately light -- strip the common monomial factor and the integer
content and scale the denominator's leading coefficient to a unit --
because equality is decided by cross-multiplication, which needs no gcd
machinery.  cancel_common() additionally cancels the polynomial gcd
when both sides involve a single symbol, which is all the removable
-pole bookkeeping ever requires.

bareiss_forward / solve_reduce provide exact linear algebra over the
fraction field: one-step fraction-free elimination with polynomial
intermediates and division only at the end.
"""

from __future__ import annotations

import json as _json
from fractions import Fraction
from functools import reduce

from . import _accel, partitions as pt
from ._kernel_py import _parts_sub as _parts_diff
from .errors import (
    DenominatorVanishes,
    DivisionByZeroFraction,
    MixedContext,
    NotDivisible,
    SingularBlock,
)
from .multipoly import MPoly, power_sum
from .rings import Coeff, RingSpec


class PPoly:
    """Immutable polynomial in the formal symbols P_1, P_2, ..."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: RingSpec, terms: dict | None = None):
        self.spec = spec
        self.terms = terms if terms is not None else {}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(spec: RingSpec) -> "PPoly":
        return PPoly(spec)

    @staticmethod
    def constant(c, spec: RingSpec) -> "PPoly":
        raw = spec.coerce(c)
        if raw == spec.zero:
            return PPoly(spec)
        return PPoly(spec, {(): raw})

    @staticmethod
    def one(spec: RingSpec) -> "PPoly":
        return PPoly.constant(1, spec)

    @staticmethod
    def symbol(i: int, spec: RingSpec) -> "PPoly":
        if i < 1:
            raise ValueError("symbol index must be >= 1")
        return PPoly(spec, {(i,): spec.one})

    @staticmethod
    def monomial(parts, spec: RingSpec, c=1) -> "PPoly":
        raw = spec.coerce(c)
        if raw == spec.zero:
            return PPoly(spec)
        return PPoly(spec, {pt.normalized(parts): raw})

    @staticmethod
    def from_terms(mapping: dict, spec: RingSpec) -> "PPoly":
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
        return PPoly(spec, terms)

    # -- structure ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == {(): self.spec.one}

    def weight(self) -> int:
        """Largest total weight of a monomial; -1 for zero."""
        if not self.terms:
            return -1
        return max(pt.weight(k) for k in self.terms)

    def symbols(self) -> set:
        out: set = set()
        for k in self.terms:
            out.update(k)
        return out

    def max_symbol(self) -> int:
        syms = self.symbols()
        return max(syms) if syms else 0

    def leading_partition(self) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=pt.grade_key)

    def leading_coeff(self):
        return self.terms[self.leading_partition()]

    def coefficient(self, parts) -> Coeff:
        return Coeff(self.spec, self.terms.get(pt.normalized(parts), self.spec.zero))

    def sorted_terms(self) -> list:
        keys = sorted(self.terms, key=pt.grade_key, reverse=True)
        return [(k, Coeff(self.spec, self.terms[k])) for k in keys]

    def _check(self, other: "PPoly"):
        if self.spec != other.spec:
            raise MixedContext(f"mixed coefficient rings {self.spec} vs {other.spec}")

    def _coerce_operand(self, other):
        if isinstance(other, PPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Coeff)):
            return PPoly.constant(other, self.spec)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        terms = _accel.kernel.add_scaled(
            self.terms, other.terms, self.spec.one, self.spec.kernel_mod)
        return PPoly(self.spec, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        terms = _accel.kernel.add_scaled(
            self.terms, other.terms, self.spec.from_int(-1), self.spec.kernel_mod)
        return PPoly(self.spec, terms)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        terms = _accel.kernel.add_scaled(
            {}, self.terms, self.spec.from_int(-1), self.spec.kernel_mod)
        return PPoly(self.spec, terms)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Coeff)):
            raw = self.spec.coerce(other)
            terms = _accel.kernel.add_scaled({}, self.terms, raw, self.spec.kernel_mod)
            return PPoly(self.spec, terms)
        if not isinstance(other, PPoly):
            return NotImplemented
        self._check(other)
        terms = _accel.kernel.mul_parts(self.terms, other.terms, self.spec.kernel_mod, 0)
        return PPoly(self.spec, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = PPoly.one(self.spec)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def exact_divide(self, other: "PPoly") -> "PPoly":
        other = self._coerce_operand(other)
        if other is None or other.is_zero:
            raise NotDivisible("division by zero polynomial")
        q = _accel.kernel.exact_div_parts(self.terms, other.terms, self.spec.kernel_mod)
        if q is None:
            raise NotDivisible("formal polynomial division is not exact")
        return PPoly(self.spec, q)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Coeff)):
            other = PPoly.constant(other, self.spec)
        if not isinstance(other, PPoly):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    __hash__ = None

    # -- content and monomial factors ----------------------------------------

    def content(self):
        """gcd of the integer coefficients over Z; the unit 1 elsewhere."""
        if self.spec.kind != "Z" or not self.terms:
            return self.spec.one
        g = 0
        for c in self.terms.values():
            g = _int_gcd(g, c)
            if g == 1:
                break
        return g

    def monomial_gcd(self) -> tuple:
        """Largest partition dividing every monomial (multiset min)."""
        it = iter(self.terms)
        try:
            acc = pt.multiplicities(next(it))
        except StopIteration:
            return ()
        for k in it:
            if not acc:
                break
            m = pt.multiplicities(k)
            acc = {s: min(c, m[s]) for s, c in acc.items() if s in m}
        parts = []
        for s, c in acc.items():
            parts.extend([s] * c)
        return tuple(sorted(parts, reverse=True))

    def divide_monomial(self, parts: tuple) -> "PPoly":
        """Exact division by the monomial P_parts (must divide every term)."""
        if not parts:
            return self
        out = {}
        for k, c in self.terms.items():
            q = _parts_diff(k, parts)
            if q is None:
                raise NotDivisible(f"monomial {parts} does not divide {k}")
            out[q] = c
        return PPoly(self.spec, out)

    def scale_exact(self, raw) -> "PPoly":
        """Divide every coefficient by raw (exactly)."""
        spec = self.spec
        return PPoly(spec, {k: spec.div(c, raw) for k, c in self.terms.items()})

    # -- substitution ----------------------------------------------------------

    def subst_x(self, n: int) -> MPoly:
        """Substitute P_i -> p_i(x_1..x_n)."""
        acc = MPoly.zero(n, self.spec)
        for parts, c in self.terms.items():
            term = MPoly.constant(c, n, self.spec)
            for p in parts:
                term = term * power_sum(p, n, self.spec)
            acc = acc + term
        return acc

    def substitute_symbols(self, mapping: dict) -> "PPoly":
        """Replace P_i by mapping[i] (a PPoly) where given; other symbols
        stay formal."""
        acc = PPoly.zero(self.spec)
        for parts, c in self.terms.items():
            term = PPoly.constant(c, self.spec)
            for s, mult in pt.multiplicities(parts).items():
                base = mapping.get(s)
                if base is None:
                    base = PPoly.symbol(s, self.spec)
                term = term * base**mult
            acc = acc + term
        return acc

    def evaluate(self, values: dict) -> Coeff:
        """Full evaluation; values maps symbol index -> ring element."""
        spec = self.spec
        acc = spec.zero
        for parts, c in self.terms.items():
            term = c
            for p in parts:
                if p not in values:
                    raise KeyError(f"no value for symbol P_{p}")
                term = spec.mul(term, spec.coerce(values[p]))
            acc = spec.add(acc, term)
        return Coeff(spec, acc)

    def partial_evaluate(self, values: dict) -> "PPoly":
        """Substitute constants for the given symbols only."""
        spec = self.spec
        terms: dict = {}
        for parts, c in self.terms.items():
            kept = []
            factor = c
            for p in parts:
                if p in values:
                    factor = spec.mul(factor, spec.coerce(values[p]))
                else:
                    kept.append(p)
            if factor == spec.zero:
                continue
            key = tuple(kept)
            if key in terms:
                factor = spec.add(terms[key], factor)
            if factor == spec.zero:
                terms.pop(key, None)
            else:
                terms[key] = factor
        return PPoly(spec, terms)

    # -- text and serialization --------------------------------------------------

    def render(self, compact: bool = False) -> str:
        if not self.terms:
            return "0"
        out = []
        for parts, c in self.sorted_terms():
            body = pt.render_compact(parts) if compact else pt.render_product(parts)
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

    def latex(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for parts, c in self.sorted_terms():
            body = pt.render_latex(parts, "p")
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

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"PPoly({self})"

    def to_json(self) -> list:
        return [
            {"partition": list(k), "coeff": c.serialize()}
            for k, c in self.sorted_terms()
        ]

    @staticmethod
    def from_json(data, spec: RingSpec) -> "PPoly":
        mapping = {
            tuple(t["partition"]): spec.from_str(t["coeff"]) for t in data
        }
        return PPoly.from_terms(mapping, spec)


def _int_gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


class PRat:
    """Normalized fraction num/den of formal power-sum polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: PPoly, den: PPoly | None = None):
        if den is None:
            den = PPoly.one(num.spec)
        num._check(den)
        if den.is_zero:
            raise DivisionByZeroFraction("formal denominator is zero")
        self.num, self.den = _normalize(num, den)

    @property
    def spec(self) -> RingSpec:
        return self.num.spec

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_one

    @staticmethod
    def from_poly(p: PPoly) -> "PRat":
        return PRat(p)

    @staticmethod
    def constant(c, spec: RingSpec) -> "PRat":
        return PRat(PPoly.constant(c, spec))

    @staticmethod
    def symbol(i: int, spec: RingSpec) -> "PRat":
        return PRat(PPoly.symbol(i, spec))

    def _coerce(self, other):
        if isinstance(other, PRat):
            if other.spec != self.spec:
                raise MixedContext("mixed coefficient rings")
            return other
        if isinstance(other, PPoly):
            return PRat(other)
        if isinstance(other, (int, Fraction, Coeff)):
            return PRat.constant(other, self.spec)
        return None

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return PRat(self.num + other.num, self.den)
        return PRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return PRat(self.num - other.num, self.den)
        return PRat(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return PRat(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero:
            raise DivisionByZeroFraction("division by the zero fraction")
        return PRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    # -- cancellation ----------------------------------------------------------

    def cancel_common(self) -> "PRat":
        """Remove the largest common monomial factor (already part of the
        normal form) and, when numerator and denominator live in a single
        common symbol, the univariate polynomial gcd in that symbol."""
        num, den = self.num, self.den
        syms = num.symbols() | den.symbols()
        if num.is_zero or len(syms) != 1:
            return PRat(num, den)
        s = next(iter(syms))
        g = _univariate_gcd(num, den, s)
        if g is None or len(g) <= 1:
            return PRat(num, den)
        gp = _dense_to_ppoly(g, s, num.spec)
        return PRat(num.exact_divide(gp), den.exact_divide(gp))

    # -- substitution ------------------------------------------------------------

    def subst_x(self, n: int) -> tuple[MPoly, MPoly]:
        """Substitute P_i -> p_i(x_1..x_n) in both parts.  A denominator
        in the kernel of the substitution raises DenominatorVanishes."""
        den = self.den.subst_x(n)
        if den.is_zero:
            raise DenominatorVanishes(
                f"denominator [{self.den}] vanishes under substitution at n={n}")
        return self.num.subst_x(n), den

    def substitute_symbols(self, mapping: dict) -> "PRat":
        num = self.num.substitute_symbols(mapping)
        den = self.den.substitute_symbols(mapping)
        if den.is_zero:
            raise DenominatorVanishes("denominator vanishes under substitution")
        return PRat(num, den)

    def partial_evaluate(self, values: dict) -> "PRat":
        num = self.num.partial_evaluate(values)
        den = self.den.partial_evaluate(values)
        if den.is_zero:
            raise DenominatorVanishes("denominator vanishes under partial evaluation")
        return PRat(num, den)

    def evaluate(self, values: dict) -> Coeff:
        den = self.den.evaluate(values)
        if den.is_zero:
            raise DivisionByZeroFraction("denominator evaluates to zero")
        return self.num.evaluate(values) / den

    # -- text and serialization -----------------------------------------------------

    def render(self, compact: bool = False) -> str:
        num = self.num.render(compact)
        if self.den.is_one:
            return num
        den = self.den.render(compact)
        nums = num if len(self.num.terms) == 1 else f"({num})"
        dens = den if len(self.den.terms) == 1 else f"({den})"
        return f"{nums}/{dens}"

    def latex(self) -> str:
        if self.den.is_one:
            return self.num.latex()
        return rf"\frac{{{self.num.latex()}}}{{{self.den.latex()}}}"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"PRat({self})"

    def to_json(self) -> dict:
        return {
            "ring": str(self.spec),
            "num": self.num.to_json(),
            "den": self.den.to_json(),
        }

    @staticmethod
    def from_json(data) -> "PRat":
        if isinstance(data, str):
            data = _json.loads(data)
        spec = RingSpec.parse(data["ring"])
        return PRat(PPoly.from_json(data["num"], spec), PPoly.from_json(data["den"], spec))


def _normalize(num: PPoly, den: PPoly) -> tuple[PPoly, PPoly]:
    """Canonical representative: zero is 0/1; the common monomial factor
    and (over Z) the joint integer content are stripped; the denominator
    is monic over a field and has positive leading coefficient over Z."""
    spec = num.spec
    if num.is_zero:
        return PPoly.zero(spec), PPoly.one(spec)
    g_num = num.monomial_gcd()
    if g_num:
        g_den = den.monomial_gcd()
        common = _parts_min(g_num, g_den)
        if common:
            num = num.divide_monomial(common)
            den = den.divide_monomial(common)
    if spec.kind == "Z":
        c = _int_gcd(num.content(), den.content())
        if c > 1:
            num = num.scale_exact(c)
            den = den.scale_exact(c)
        if den.leading_coeff() < 0:
            num, den = -num, -den
    else:
        lc = den.leading_coeff()
        if lc != spec.one:
            inv = spec.inv(lc)
            num = num * inv
            den = den * inv
    return num, den


def _parts_min(a: tuple, b: tuple) -> tuple:
    """Multiset intersection of two partitions."""
    ma, mb = pt.multiplicities(a), pt.multiplicities(b)
    parts = []
    for s, c in ma.items():
        if s in mb:
            parts.extend([s] * min(c, mb[s]))
    return tuple(sorted(parts, reverse=True))


def _to_dense(p: PPoly, s: int) -> list:
    """Coefficient list of a PPoly univariate in symbol s (ascending)."""
    deg = max((len(k) for k in p.terms), default=0)
    out = [p.spec.zero] * (deg + 1)
    for k, c in p.terms.items():
        out[len(k)] = c
    return out


def _dense_to_ppoly(coeffs: list, s: int, spec: RingSpec) -> PPoly:
    terms = {}
    for e, c in enumerate(coeffs):
        if c != spec.zero:
            terms[(s,) * e] = c
    return PPoly(spec, terms)


def _univariate_gcd(num: PPoly, den: PPoly, s: int):
    """Monic gcd of two univariate polynomials in P_s, or None when the
    coefficient ring offers no exact division route (never happens for
    the supported domains: Z is routed through Q)."""
    spec = num.spec
    if spec.kind == "Z":
        qq = RingSpec.rationals()
        a = [Fraction(c) for c in _to_dense(num, s)]
        b = [Fraction(c) for c in _to_dense(den, s)]
        g = _euclid(a, b, qq)
        # clear denominators back into Z, primitive with positive lead
        lcm = 1
        for c in g:
            lcm = lcm * c.denominator // _int_gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in g]
        cont = 0
        for c in ints:
            cont = _int_gcd(cont, c)
        ints = [c // cont for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return ints
    a = _to_dense(num, s)
    b = _to_dense(den, s)
    return _euclid(a, b, spec)


def _euclid(a: list, b: list, spec: RingSpec) -> list:
    """Monic gcd of dense univariate polynomials over a field."""

    def trim(p):
        while p and p[-1] == spec.zero:
            p.pop()
        return p

    def polymod(p, q):
        inv = spec.inv(q[-1])
        r = list(p)
        while len(r) >= len(q):
            factor = spec.mul(r[-1], inv)
            off = len(r) - len(q)
            for i, c in enumerate(q):
                r[off + i] = spec.sub(r[off + i], spec.mul(factor, c))
            r.pop()
            trim(r)
        return r

    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, polymod(a, b)
    if not a:
        return []
    inv = spec.inv(a[-1])
    return [spec.mul(c, inv) for c in a]


# -- exact linear algebra over the fraction field ---------------------------


def bareiss_forward(rows: list) -> tuple[list, int]:
    """Fraction-free forward elimination of a d x c PPoly matrix (c >= d).

    Returns (U, sign): U is upper triangular on the leading block with
    U[i][i] equal (up to the row-swap sign) to the i+1-st leading minor;
    in particular U[d-1][d-1] is the determinant of the leading block.
    Raises SingularBlock when a pivot column is formally zero."""
    d = len(rows)
    if d == 0 or any(len(r) < d for r in rows):
        raise ValueError("need a d x c matrix with c >= d")
    spec = rows[0][0].spec
    m = [list(r) for r in rows]
    cols = len(m[0])
    sign = 1
    prev = None
    for p in range(d):
        if m[p][p].is_zero:
            for i in range(p + 1, d):
                if not m[i][p].is_zero:
                    m[p], m[i] = m[i], m[p]
                    sign = -sign
                    break
            else:
                raise SingularBlock(f"no pivot available in column {p}")
        piv = m[p][p]
        for i in range(p + 1, d):
            for j in range(p + 1, cols):
                t = piv * m[i][j] - m[i][p] * m[p][j]
                m[i][j] = t if prev is None else t.exact_divide(prev)
            m[i][p] = PPoly.zero(spec)
        prev = piv
    return m, sign


def solve_reduce(rows: list) -> list:
    """Row-reduce a d x (d+c) system over the fraction field to (I_d | C).

    Entries may be PRat or PPoly.  The leading d x d block must be
    formally non-singular.  Elimination is fraction-free internally; the
    only divisions are by the Bareiss pivots at the end."""
    d = len(rows)
    if d == 0:
        raise ValueError("empty system")
    first = rows[0][0]
    spec = first.spec
    cols = len(rows[0])
    if cols < d or any(len(r) != cols for r in rows):
        raise ValueError("need a d x (d+c) matrix")

    poly_rows = []
    for r in rows:
        fracs = [e if isinstance(e, PRat) else PRat(e) for e in r]
        row = []
        for j, f in enumerate(fracs):
            other = PPoly.one(spec)
            for jj, f2 in enumerate(fracs):
                if jj != j:
                    other = other * f2.den
            row.append(f.num * other)
        poly_rows.append(row)

    u, _ = bareiss_forward(poly_rows)

    one = PRat.constant(1, spec)
    zero = PRat.constant(0, spec)
    out = [[one if i == j else zero for j in range(d)] for i in range(d)]
    tail = [[None] * (cols - d) for _ in range(d)]
    for i in range(d - 1, -1, -1):
        piv = u[i][i]
        for j in range(d, cols):
            val = PRat(u[i][j], piv)
            for m_ in range(i + 1, d):
                val = val - PRat(u[i][m_], piv) * tail[m_][j - d]
            tail[i][j - d] = val
    for i in range(d):
        out[i].extend(tail[i])
    return out

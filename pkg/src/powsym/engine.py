"""Synthesis of elementary symmetric polynomials as rational functions of
power sums, over any of the supported coefficient rings.

For a unit index k the classical Newton identity already gives e_k.  For
a non-unit k (k >= the ring's r0) the vanishing of e_N for N > n turns
the Newton identities into a homogeneous linear system whose unknowns
are (e_n, ..., e_1, 1) and whose coefficients are power sums

    row t (t = 1..n-k+1):   entry(t, j) = (-1)^(t+j) P_{t+j-1},

i.e. a sign-decorated Hankel matrix extended to n+1 columns.  The
leading (n-k+1) block has determinant equal to the Hankel determinant
det(P_{t+j-1}), which is formally non-zero, so fraction-free elimination
reduces the system and its final row solves for e_k in terms of
e_0..e_{k-1} and the symbols P_1..P_{2n-k+1}.

Every produced formula carries a substitution certificate: replacing
P_i by the concrete power sum p_i(x_1..x_n) and dividing exactly must
return e_k(x_1..x_n) on the nose.  verify_formula checks exactly that.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

from ._matrix import numeric_det
from .errors import InvalidRange, UnsupportedRing
from .multipoly import MPoly, determinant, elementary, power_sum
from .prational import PPoly, PRat, bareiss_forward
from .rings import Coeff, RingSpec

# Internal symbol slots for lower elementary values that are kept formal
# (the "mixed" display style); P-symbols live far below this offset.
E_SYMBOL_BASE = 10**6


@dataclass(frozen=True)
class HankelSpec:
    """The d x d Hankel matrix with entry (i, j) = P_{start+i+j-2},
    attached to an n-variable context."""

    d: int
    n: int
    start: int = 1

    def __post_init__(self):
        if self.d < 1 or self.start < 1:
            raise InvalidRange("Hankel size and start index must be >= 1")

    def entry_index(self, i: int, j: int) -> int:
        """Symbol index at 1-based position (i, j); constant anti-diagonals."""
        return self.start + i + j - 2

    def label(self) -> str:
        return f"det P_{{{self.d},{self.n}}}"


def hankel_matrix(h: HankelSpec, spec: RingSpec) -> list:
    """The matrix of formal symbols described by h."""
    return [
        [PPoly.symbol(h.entry_index(i, j), spec) for j in range(1, h.d + 1)]
        for i in range(1, h.d + 1)
    ]


@lru_cache(maxsize=None)
def hankel_det_formal(d: int, spec: RingSpec, start: int = 1) -> PPoly:
    """Determinant of the d x d formal Hankel matrix, expanded by
    permutations (d stays small here)."""
    rows = hankel_matrix(HankelSpec(d, d, start), spec)
    return _ppoly_det(rows, spec)


def _ppoly_det(rows: list, spec: RingSpec) -> PPoly:
    d = len(rows)
    if d == 1:
        return rows[0][0]
    acc = PPoly.zero(spec)
    for j in range(d):
        entry = rows[0][j]
        if entry.is_zero:
            continue
        minor = [[rows[i][jj] for jj in range(d) if jj != j] for i in range(1, d)]
        sub = entry * _ppoly_det(minor, spec)
        acc = acc + sub if j % 2 == 0 else acc - sub
    return acc


@lru_cache(maxsize=None)
def hankel_det_mpoly(d: int, n: int, spec: RingSpec) -> MPoly:
    """det of the concrete power-sum Hankel matrix P_{d,n}, cached: the
    verification sweeps and the membership of x-monomial witnesses all
    reuse these."""
    rows = [
        [power_sum(i + j - 1, n, spec) for j in range(1, d + 1)]
        for i in range(1, d + 1)
    ]
    return determinant(rows)


def build_system(n: int, k: int, spec: RingSpec) -> list:
    """The (n-k+1) x (n+1) homogeneous system annihilating
    (e_n, ..., e_1, 1), rows indexed by the vanishing Newton identity at
    N = n+1 .. 2n-k+1.  Only meaningful for non-unit k."""
    if not 1 <= k <= n:
        raise InvalidRange(f"need 1 <= k <= n, got k={k}, n={n}")
    if spec.is_invertible_int(k):
        raise InvalidRange(
            f"{k} is a unit in {spec}; use the Newton identity directly")
    rows = []
    for t in range(1, n - k + 2):
        row = []
        for j in range(1, n + 2):
            sym = PPoly.symbol(t + j - 1, spec)
            row.append(sym if (t + j) % 2 == 0 else -sym)
        rows.append(row)
    return rows


@dataclass
class EFormula:
    """e_k as a fraction of formal power-sum polynomials, with its
    substitution certificate status."""

    k: int
    n: int
    spec: RingSpec
    value: PRat
    denominator_id: HankelSpec | None = None
    verified: bool | None = None
    provenance: str = "newton"

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "ring": str(self.spec),
            "num": self.value.num.to_json(),
            "den": self.value.den.to_json(),
            "denominator": self.denominator_id.label() if self.denominator_id else "unit",
            "provenance": self.provenance,
            "verified": self.verified,
        }


def mixed_relation(k: int, n: int, spec: RingSpec) -> tuple[list, PPoly, HankelSpec | None]:
    """e_k expressed over the previous elementary values:

        e_k = (sum_{i=0}^{k-1} A_i * e_i) / D

    with A_i and D polynomials in the power-sum symbols.  Unit k comes
    from the Newton identity (D = 1); non-unit k from the reduced Hankel
    system (D = the formal Hankel determinant of size n-k+1)."""
    if not 1 <= k <= n:
        raise InvalidRange(f"need 1 <= k <= n, got k={k}, n={n}")
    if spec.is_invertible_int(k):
        kinv = spec.inv(spec.from_int(k))
        coeffs = []
        for i in range(k):
            # term (-1)^(k-i-1) * k^-1 * P_{k-i} multiplying e_i
            sign = 1 if (k - i - 1) % 2 == 0 else -1
            c = spec.mul(kinv, spec.from_int(sign))
            coeffs.append(PPoly.symbol(k - i, spec) * c)
        return coeffs, PPoly.one(spec), None
    if spec.kind == "Q":
        raise UnsupportedRing("all integers are invertible over Q")
    if n < spec.r0():
        raise InvalidRange(
            f"need n >= r0 = {spec.r0()} to solve for the non-unit index {k}")
    rows = build_system(n, k, spec)
    u, _ = bareiss_forward(rows)
    d = n - k + 1
    den = u[d - 1][d - 1]
    coeffs = [-u[d - 1][n - i] for i in range(k)]
    return coeffs, den, HankelSpec(d, n)


@lru_cache(maxsize=None)
def express_e(k: int, n: int, spec: RingSpec, inline_lower: bool = True) -> EFormula:
    """e_k(x_1..x_n) as a rational function of the power-sum symbols.

    Built inductively over k, reusing the cached lower formulas.  With
    inline_lower=False the lower elementary values stay formal (rendered
    as E_i), reproducing the mixed display style."""
    coeffs, den, den_id = mixed_relation(k, n, spec)
    acc = PRat(coeffs[0], den)
    for i in range(1, k):
        ci = PRat(coeffs[i], den)
        if inline_lower:
            acc = acc + ci * express_e(i, n, spec).value
        else:
            acc = acc + ci * PRat.symbol(E_SYMBOL_BASE + i, spec)
    provenance = "newton" if den_id is None else "hankel"
    return EFormula(k, n, spec, acc, den_id, None, provenance)


def inline_mixed(f: EFormula) -> PRat:
    """Substitute the cached lower formulas for the E_i slots of a mixed
    formula."""
    mapping = {}
    for s in f.value.num.symbols() | f.value.den.symbols():
        if s >= E_SYMBOL_BASE:
            mapping[s] = express_e(s - E_SYMBOL_BASE, f.n, f.spec).value
    if not mapping:
        return f.value
    return _substitute_fractions(f.value, mapping)


def _substitute_fractions(value: PRat, mapping: dict) -> PRat:
    """Substitute PRat values for symbols inside a PRat."""

    def subst_poly(p: PPoly) -> PRat:
        spec = p.spec
        acc = PRat.constant(0, spec)
        for parts, c in p.terms.items():
            term = PRat.constant(Coeff(spec, c), spec)
            for s in parts:
                term = term * mapping.get(s, PRat.symbol(s, spec))
            acc = acc + term
        return acc

    num = subst_poly(value.num)
    den = subst_poly(value.den)
    return num / den


def max_symbol_used(f: EFormula) -> int:
    syms = {s for s in f.value.num.symbols() | f.value.den.symbols() if s < E_SYMBOL_BASE}
    return max(syms) if syms else 0


def symbol_budget(n: int, spec: RingSpec) -> int:
    """Highest power-sum index the synthesis may use: 2n+1-r0 (positive
    characteristic and Z); n over Q."""
    if spec.kind == "Q":
        return n
    return 2 * n + 1 - spec.r0()


def verify_formula(f: EFormula) -> bool:
    """Substitution certificate: P_i -> p_i(x_1..x_n), the denominator
    must stay non-zero, and num/den must divide exactly to e_k."""
    from .errors import DenominatorVanishes, NotDivisible

    value = f.value
    if any(s >= E_SYMBOL_BASE for s in value.num.symbols() | value.den.symbols()):
        value = inline_mixed(f)
    try:
        num, den = value.subst_x(f.n)
    except DenominatorVanishes:
        f.verified = False
        return False
    try:
        quot = num.exact_divide(den)
    except NotDivisible:
        f.verified = False
        return False
    ok = quot == elementary(f.k, f.n, f.spec)
    f.verified = ok
    return ok


def denominator_test(k: int, n: int, values, spec: RingSpec | None = None) -> bool:
    """Evaluability test at a concrete point: the (n-k+1)-size Hankel
    determinant of power sums at the point must be non-zero.  True
    guarantees the e_k formula evaluates there without division by
    zero."""
    if not 1 <= k <= n:
        raise InvalidRange(f"need 1 <= k <= n, got k={k}, n={n}")
    vals = list(values)
    if spec is None:
        if not vals or not isinstance(vals[0], Coeff):
            raise ValueError("pass a RingSpec or Coeff values")
        spec = vals[0].spec
    raw = [spec.coerce(v) for v in vals]
    if len(raw) != n:
        raise ValueError(f"expected {n} values")
    d = n - k + 1
    ps = []
    for m in range(1, 2 * d):
        acc = spec.zero
        for v in raw:
            acc = spec.add(acc, spec.pow(v, m))
        ps.append(acc)
    det = numeric_det([[ps[i + j] for j in range(d)] for i in range(d)], spec)
    return det != spec.zero


@dataclass
class SweepResult:
    k: int
    n: int
    spec: RingSpec
    verified: bool
    denominator: str
    seconds: float

    def row(self) -> tuple:
        return (self.k, self.n, str(self.spec), self.verified, self.denominator,
                f"{self.seconds:.3f}s")


def soundness_sweep(specs, max_n: int):
    """verify_formula(express_e(k, n, spec)) over the whole grid; yields
    SweepResult rows.  Grid: every spec, r0 <= n <= max_n (n >= 1 over
    Q), 1 <= k <= n."""
    for spec in specs:
        n_lo = 1 if spec.kind == "Q" else spec.r0()
        for n in range(n_lo, max_n + 1):
            for k in range(1, n + 1):
                t0 = time.perf_counter()
                f = express_e(k, n, spec)
                ok = verify_formula(f)
                dt = time.perf_counter() - t0
                den_id = f.denominator_id.label() if f.denominator_id else "unit"
                yield SweepResult(k, n, spec, ok, den_id, dt)

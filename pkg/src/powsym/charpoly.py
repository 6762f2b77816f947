"""Characteristic polynomials of linear operators from trace data.

Over a field K, the traces Tr(T^d) are the power sums of the eigenvalues,
so the coefficients of the characteristic polynomial -- elementary
symmetric in the eigenvalues -- can be recovered with the same machinery
that rewrites e_k in terms of power sums.  A unit index k needs nothing
but the Newton identity; an index divisible by the characteristic goes
through the reduced Hankel relation, guarded by the trace Hankel
determinant, with a removable-pole fallback when that determinant
vanishes.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from . import engine
from ._matrix import coerce_matrix, mat_mul, mat_trace, numeric_det
from .errors import (
    DenominatorVanishes,
    DivisionByZeroFraction,
    Indeterminate,
    InsufficientTraces,
    InvalidRange,
    UnsupportedRing,
)
from .multipoly import MPoly, determinant
from .prational import PPoly, PRat
from .rings import Coeff, RingSpec


class TraceConsistencyWarning(UserWarning):
    """The input violates the p_{kr} = p_k^r relation that every genuine
    trace sequence in characteristic r satisfies."""


def required_traces(spec: RingSpec, n: int) -> int:
    """Trace horizon for an n-dimensional operator: n when every index
    up to n is a unit (characteristic zero or r > n), else 2n+1-r."""
    r = spec.characteristic()
    if r == 0 or r > n:
        return n
    return 2 * n + 1 - r


@dataclass
class TraceSequence:
    """Tr(T), Tr(T^2), ... for an operator on an n-dimensional space."""

    spec: RingSpec
    n: int
    traces: tuple

    def __init__(self, spec: RingSpec, n: int, traces):
        if not spec.is_field:
            raise UnsupportedRing("trace recovery needs a field")
        if n < 1:
            raise ValueError("dimension must be >= 1")
        self.spec = spec
        self.n = n
        self.traces = tuple(Coeff.of(spec, t) for t in traces)
        bad = self.frobenius_violations()
        if bad:
            pairs = ", ".join(f"Tr(T^{kr}) != Tr(T^{k})^{r}" for k, kr, r in bad)
            warnings.warn(
                f"not a consistent trace sequence in characteristic "
                f"{spec.characteristic()}: {pairs}", TraceConsistencyWarning,
                stacklevel=2)

    def __len__(self):
        return len(self.traces)

    def value(self, d: int) -> Coeff:
        """Tr(T^d), 1-based."""
        if d < 1 or d > len(self.traces):
            raise InsufficientTraces(f"Tr(T^{d}) not provided")
        return self.traces[d - 1]

    def frobenius_violations(self) -> list:
        """(k, k*r, r) triples where Tr(T^{kr}) != Tr(T^k)^r."""
        r = self.spec.characteristic()
        out = []
        if r == 0:
            return out
        k = 1
        while k * r <= len(self.traces):
            if self.traces[k * r - 1] != self.traces[k - 1] ** r:
                out.append((k, k * r, r))
            k += 1
        return out

    def to_json(self) -> dict:
        return {
            "ring": str(self.spec),
            "n": self.n,
            "traces": [t.serialize() for t in self.traces],
        }


@dataclass
class CharPoly:
    """Monic characteristic polynomial with per-coefficient provenance."""

    spec: RingSpec
    n: int
    coeffs: tuple  # coefficient of X^n first; always monic
    provenance: dict = field(default_factory=dict)

    @staticmethod
    def from_elementary(e_values: list, spec: RingSpec, provenance=None) -> "CharPoly":
        """Assemble X^n - e_1 X^(n-1) + ... + (-1)^n e_n."""
        n = len(e_values) - 1  # e_values[0] is e_0 = 1
        coeffs = []
        for k in range(n + 1):
            sign = 1 if k % 2 == 0 else -1
            coeffs.append(Coeff.of(spec, e_values[k] * spec.from_int(sign)))
        return CharPoly(spec, n, tuple(coeffs), provenance or {})

    def elementary_values(self) -> list:
        """Recover [e_0, e_1, ..., e_n] from the signed coefficients."""
        out = []
        for k, c in enumerate(self.coeffs):
            sign = 1 if k % 2 == 0 else -1
            out.append(c * self.spec.from_int(sign))
        return out

    def __str__(self):
        # balanced residues for prime fields: X^3 - X, not X^3 + 2*X
        r = self.spec.characteristic()
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            e = self.n - k
            if e == 0:
                body = ""
            elif e == 1:
                body = "X"
            else:
                body = f"X^{e}"
            v = c.value
            if r and v > r // 2:
                v -= r
            cs = str(v)
            if body and cs == "1":
                parts.append(body)
            elif body and cs == "-1":
                parts.append(f"-{body}")
            elif body:
                parts.append(f"{cs}*{body}")
            else:
                parts.append(cs)
        out = " + ".join(parts) if parts else "0"
        return out.replace("+ -", "- ")

    def __eq__(self, other):
        if not isinstance(other, CharPoly):
            return NotImplemented
        return (self.spec, self.n, self.coeffs) == (other.spec, other.n, other.coeffs)

    def to_json(self) -> dict:
        return {
            "ring": str(self.spec),
            "n": self.n,
            "coeffs": [c.serialize() for c in self.coeffs],
            "provenance": {f"e{k}": v for k, v in sorted(self.provenance.items())},
        }


def determinant_condition(t: TraceSequence, k: int) -> Coeff:
    """Determinant of the (n-k+1)-square Hankel matrix of traces; its
    non-vanishing guarantees that e_k is directly evaluable."""
    if not 1 <= k <= t.n:
        raise InvalidRange(f"need 1 <= k <= n, got k={k}")
    d = t.n - k + 1
    spec = t.spec
    rows = [
        [t.value(i + j - 1).value for j in range(1, d + 1)] for i in range(1, d + 1)
    ]
    return Coeff(spec, numeric_det(rows, spec))


def charpoly_from_traces(t: TraceSequence) -> CharPoly:
    """Recover the characteristic polynomial from Tr(T^d) values.

    e_k comes from the Newton identity when k is a unit, else from the
    reduced Hankel relation evaluated at the traces; when the guarding
    determinant vanishes the removable-pole fallback substitutes the
    non-zero traces, cancels, and substitutes the zeros afterwards.
    Raises Indeterminate(k) when no route evaluates."""
    spec, n = t.spec, t.n
    e_vals: list = [spec.one]  # raw values, e_0 = 1
    provenance: dict = {}
    for k in range(1, n + 1):
        if spec.is_invertible_int(k):
            if len(t.traces) < k:
                raise InsufficientTraces(
                    f"e_{k} needs Tr(T^1..T^{k}); got {len(t.traces)} traces")
            acc = spec.zero
            for i in range(1, k + 1):
                sign = spec.from_int(1 if (i - 1) % 2 == 0 else -1)
                term = spec.mul(e_vals[k - i], t.value(i).value)
                acc = spec.add(acc, spec.mul(sign, term))
            e_vals.append(spec.mul(spec.inv(spec.from_int(k)), acc))
            provenance[k] = "newton"
            continue

        horizon = 2 * n - k + 1
        if len(t.traces) < horizon:
            raise InsufficientTraces(
                f"e_{k} needs Tr(T^1..T^{horizon}); got {len(t.traces)} traces")
        coeffs, den, _ = engine.mixed_relation(k, n, spec)
        num = PPoly.zero(spec)
        for i in range(k):
            num = num + coeffs[i] * e_vals[i]
        values = {j: t.traces[j - 1].value for j in range(1, horizon + 1)}
        den_val = den.evaluate(values)
        if not den_val.is_zero:
            e_vals.append((num.evaluate(values) / den_val).value)
            provenance[k] = "hankel"
            continue

        # removable-pole fallback: keep zero-trace symbols formal
        nonzero = {j: v for j, v in values.items() if v != spec.zero}
        try:
            rat = PRat(num, den).partial_evaluate(nonzero).cancel_common()
        except DenominatorVanishes:
            raise Indeterminate(k, partial=provenance) from None
        zeros = {j: spec.zero for j in values}
        try:
            val = rat.evaluate(zeros)
        except DivisionByZeroFraction:
            raise Indeterminate(k, partial=provenance) from None
        e_vals.append(val.value)
        provenance[k] = "removable-pole"

    return CharPoly.from_elementary(
        [Coeff(spec, v) for v in e_vals], spec, provenance)


def simulate_traces(matrix, spec: RingSpec, horizon: int | None = None) -> TraceSequence:
    """Tr(T^d) for d = 1..horizon by repeated multiplication; the default
    horizon is what charpoly_from_traces needs for this dimension."""
    if not spec.is_field:
        raise UnsupportedRing("trace simulation needs a field")
    m = coerce_matrix(matrix, spec)
    n = len(m)
    if horizon is None:
        horizon = required_traces(spec, n)
    traces = []
    power = m
    for _ in range(horizon):
        traces.append(Coeff(spec, mat_trace(power, spec)))
        power = mat_mul(power, m, spec)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TraceConsistencyWarning)
        return TraceSequence(spec, n, traces)


def charpoly_direct(matrix, spec: RingSpec) -> CharPoly:
    """Oracle route: expand det(X*I - T) in the univariate polynomial
    ring.  Used to cross-check the trace-based reconstruction."""
    m = coerce_matrix(matrix, spec)
    n = len(m)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                entry = MPoly.from_terms({(1,): spec.one, (0,): spec.neg(m[i][j])}, 1, spec)
            else:
                entry = MPoly.constant(spec.neg(m[i][j]), 1, spec)
            row.append(entry)
        rows.append(row)
    det = determinant(rows)
    coeffs = tuple(det.coefficient((n - k,)) for k in range(n + 1))
    return CharPoly(spec, n, coeffs, {k: "direct" for k in range(1, n + 1)})

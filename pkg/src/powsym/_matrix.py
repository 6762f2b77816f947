"""Small exact matrix helpers over a RingSpec (raw elements)."""

from __future__ import annotations

from .rings import RingSpec


def coerce_matrix(rows, spec: RingSpec) -> list:
    out = [[spec.coerce(v) for v in r] for r in rows]
    d = len(out)
    if d == 0 or any(len(r) != d for r in out):
        raise ValueError("need a non-empty square matrix")
    return out


def mat_mul(a: list, b: list, spec: RingSpec) -> list:
    d = len(a)
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            acc = spec.zero
            for t in range(d):
                acc = spec.add(acc, spec.mul(a[i][t], b[t][j]))
            row.append(acc)
        out.append(row)
    return out


def mat_trace(a: list, spec: RingSpec):
    acc = spec.zero
    for i in range(len(a)):
        acc = spec.add(acc, a[i][i])
    return acc


def numeric_det(rows: list, spec: RingSpec):
    """Fraction-free determinant of a matrix of raw ring elements; all
    intermediate divisions are exact, so it is valid over Z as well."""
    d = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = None
    for p in range(d - 1):
        if m[p][p] == spec.zero:
            for i in range(p + 1, d):
                if m[i][p] != spec.zero:
                    m[p], m[i] = m[i], m[p]
                    sign = -sign
                    break
            else:
                return spec.zero
        piv = m[p][p]
        for i in range(p + 1, d):
            for j in range(p + 1, d):
                t = spec.sub(spec.mul(piv, m[i][j]), spec.mul(m[i][p], m[p][j]))
                m[i][j] = t if prev is None else spec.div(t, prev)
            m[i][p] = spec.zero
        prev = piv
    det = m[d - 1][d - 1]
    return det if sign > 0 else spec.neg(det)

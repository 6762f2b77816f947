"""Pure-Python term kernels for sparse polynomial arithmetic.

These are the hot inner loops of the whole library.  A compiled twin
(powsym._kernel, built from _kernel.pyx) implements the identical
contract; powsym._accel picks whichever is available.

Term dictionaries map a monomial key to a non-zero raw coefficient.
Two key shapes are used:

  exponent vectors  -- int tuples of fixed length n (x-variables)
  partitions        -- descending int tuples of any length (P-symbols)

The coefficient mode is a single integer ``mod``:

  mod > 0   prime field: coefficients are ints reduced into [0, mod)
  mod == 0  exact integer domain (Python ints)
  mod == -1 exact fraction field (objects supporting /, e.g. Fraction)
"""

from heapq import heappop, heappush

BACKEND = "python"


def add_scaled(a: dict, b: dict, factor, mod: int) -> dict:
    """a + factor*b, keys untouched.  Returns a fresh dict."""
    out = dict(a)
    for k, v in b.items():
        c = out.get(k)
        if c is None:
            c = factor * v
            if mod > 0:
                c %= mod
            if c:
                out[k] = c
        else:
            c = c + factor * v
            if mod > 0:
                c %= mod
            if c:
                out[k] = c
            else:
                del out[k]
    return out


def mul_expvec(a: dict, b: dict, mod: int) -> dict:
    """Product of two exponent-vector term dicts."""
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            c = out.get(k)
            c = va * vb if c is None else c + va * vb
            if mod > 0:
                c %= mod
            if c:
                out[k] = c
            elif k in out:
                del out[k]
    return out


def _merge_parts(a: tuple, b: tuple) -> tuple:
    """Multiset union of two descending tuples, kept descending."""
    i = j = 0
    la, lb = len(a), len(b)
    out = []
    while i < la and j < lb:
        if a[i] >= b[j]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mul_parts(a: dict, b: dict, mod: int, max_part: int) -> dict:
    """Product of two partition-keyed term dicts.  With max_part > 0,
    merged keys containing a larger part are dropped (e_k = 0 past the
    variable count)."""
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = _merge_parts(ka, kb)
            if max_part > 0 and k and k[0] > max_part:
                continue
            c = out.get(k)
            c = va * vb if c is None else c + va * vb
            if mod > 0:
                c %= mod
            if c:
                out[k] = c
            elif k in out:
                del out[k]
    return out


def _neg_grlex(k: tuple):
    return (-sum(k), tuple(-e for e in k))


def _coeff_quot(cf, cg, mod: int):
    """Coefficient quotient in the given mode, or None when not exact."""
    if mod > 0:
        return cf * pow(cg, -1, mod) % mod
    if mod == 0:
        q, r = divmod(cf, cg)
        return None if r else q
    return cf / cg


def _exact_div(f: dict, g: dict, mod: int, key_sub, key_add) -> dict | None:
    """Shared quotient loop for both key shapes.

    key_sub(kf, kg) returns the key quotient or None when the monomial
    does not divide; key_add combines keys.  A lazy max-heap tracks the
    current leading term of the shrinking remainder."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return {}
    gk = max(g, key=lambda k: (sum(k), k))
    gc = g[gk]
    rem = dict(f)
    heap: list = []
    for k in rem:
        heappush(heap, (_neg_grlex(k), k))
    quot: dict = {}
    while rem:
        while True:
            _, k = heappop(heap)
            if k in rem:
                break
        qk = key_sub(k, gk)
        if qk is None:
            return None
        qc = _coeff_quot(rem[k], gc, mod)
        if qc is None:
            return None
        quot[qk] = qc
        for k2, c2 in g.items():
            kk = key_add(qk, k2)
            prev = rem.get(kk)
            if prev is None:
                c = -qc * c2
                if mod > 0:
                    c %= mod
                if c:
                    rem[kk] = c
                    heappush(heap, (_neg_grlex(kk), kk))
            else:
                c = prev - qc * c2
                if mod > 0:
                    c %= mod
                if c:
                    rem[kk] = c
                else:
                    del rem[kk]
    return quot


def _expvec_add(ka: tuple, kb: tuple) -> tuple:
    return tuple(x + y for x, y in zip(ka, kb))


def _expvec_sub(kf: tuple, kg: tuple):
    out = []
    for x, y in zip(kf, kg):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def _parts_sub(kf: tuple, kg: tuple):
    """Multiset difference kf - kg, or None when kg is not contained."""
    out = []
    i = j = 0
    lf, lg = len(kf), len(kg)
    while i < lf and j < lg:
        if kf[i] == kg[j]:
            i += 1
            j += 1
        elif kf[i] > kg[j]:
            out.append(kf[i])
            i += 1
        else:
            return None
    if j < lg:
        return None
    out.extend(kf[i:])
    return tuple(out)


def exact_div_expvec(f: dict, g: dict, mod: int) -> dict | None:
    """Quotient of exponent-vector dicts, or None when g does not divide f."""
    return _exact_div(f, g, mod, _expvec_sub, _expvec_add)


def exact_div_parts(f: dict, g: dict, mod: int) -> dict | None:
    """Quotient of partition-keyed dicts, or None when g does not divide f."""
    return _exact_div(f, g, mod, _parts_sub, _merge_parts)

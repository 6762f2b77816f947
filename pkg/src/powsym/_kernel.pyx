# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of powsym._kernel_py.

Same contract, same algorithms; coefficients stay Python objects (the
exactness story does not change), the win is compiled dict/tuple loop
machinery.  See _kernel_py for the documented semantics."""

from heapq import heappop, heappush

BACKEND = "cython"


def add_scaled(dict a, dict b, factor, long mod):
    cdef dict out = dict(a)
    cdef object k, v, c
    for k, v in b.items():
        c = out.get(k)
        if c is None:
            c = factor * v
            if mod > 0:
                c = c % mod
            if c:
                out[k] = c
        else:
            c = c + factor * v
            if mod > 0:
                c = c % mod
            if c:
                out[k] = c
            else:
                del out[k]
    return out


cdef inline tuple _expvec_add(tuple ka, tuple kb):
    cdef Py_ssize_t n = len(ka)
    cdef Py_ssize_t i
    cdef list out = [0] * n
    for i in range(n):
        out[i] = ka[i] + kb[i]
    return tuple(out)


def mul_expvec(dict a, dict b, long mod):
    cdef dict out = {}
    cdef tuple ka, kb, k
    cdef object va, vb, c
    if len(a) < len(b):
        a, b = b, a
    for ka, va in a.items():
        for kb, vb in b.items():
            k = _expvec_add(ka, kb)
            c = out.get(k)
            c = va * vb if c is None else c + va * vb
            if mod > 0:
                c = c % mod
            if c:
                out[k] = c
            elif k in out:
                del out[k]
    return out


cdef tuple _merge_parts(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef list out = []
    while i < la and j < lb:
        if a[i] >= b[j]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    while i < la:
        out.append(a[i])
        i += 1
    while j < lb:
        out.append(b[j])
        j += 1
    return tuple(out)


def mul_parts(dict a, dict b, long mod, long max_part):
    cdef dict out = {}
    cdef tuple ka, kb, k
    cdef object va, vb, c
    if len(a) < len(b):
        a, b = b, a
    for ka, va in a.items():
        for kb, vb in b.items():
            k = _merge_parts(ka, kb)
            if max_part > 0 and len(k) > 0 and <long>k[0] > max_part:
                continue
            c = out.get(k)
            c = va * vb if c is None else c + va * vb
            if mod > 0:
                c = c % mod
            if c:
                out[k] = c
            elif k in out:
                del out[k]
    return out


cdef inline tuple _neg_grlex(tuple k):
    cdef Py_ssize_t i, n = len(k)
    cdef long s = 0
    cdef list neg = [0] * n
    for i in range(n):
        s += <long>k[i]
        neg[i] = -<long>k[i]
    return (-s, tuple(neg))


cdef object _coeff_quot(object cf, object cg, long mod):
    cdef object q, r
    if mod > 0:
        return cf * pow(cg, -1, mod) % mod
    if mod == 0:
        q, r = divmod(cf, cg)
        return None if r else q
    return cf / cg


cdef object _expvec_sub(tuple kf, tuple kg):
    cdef Py_ssize_t i, n = len(kf)
    cdef list out = [0] * n
    for i in range(n):
        if kf[i] < kg[i]:
            return None
        out[i] = kf[i] - kg[i]
    return tuple(out)


cdef object _parts_sub(tuple kf, tuple kg):
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t lf = len(kf), lg = len(kg)
    while i < lf and j < lg:
        if kf[i] == kg[j]:
            i += 1
            j += 1
        elif <long>kf[i] > <long>kg[j]:
            out.append(kf[i])
            i += 1
        else:
            return None
    if j < lg:
        return None
    while i < lf:
        out.append(kf[i])
        i += 1
    return tuple(out)


cdef object _exact_div(dict f, dict g, long mod, bint parts):
    cdef dict rem, quot
    cdef list heap = []
    cdef tuple gk, k, kk
    cdef object gc, qk, qc, prev, c, c2, k2
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return {}
    gk = max(g, key=lambda key: (sum(key), key))
    gc = g[gk]
    rem = dict(f)
    for k in rem:
        heappush(heap, (_neg_grlex(k), k))
    quot = {}
    while rem:
        while True:
            _, k = heappop(heap)
            if k in rem:
                break
        qk = _parts_sub(k, gk) if parts else _expvec_sub(k, gk)
        if qk is None:
            return None
        qc = _coeff_quot(rem[k], gc, mod)
        if qc is None:
            return None
        quot[<tuple>qk] = qc
        for k2, c2 in g.items():
            kk = _merge_parts(<tuple>qk, <tuple>k2) if parts else _expvec_add(<tuple>qk, <tuple>k2)
            prev = rem.get(kk)
            if prev is None:
                c = -qc * c2
                if mod > 0:
                    c = c % mod
                if c:
                    rem[kk] = c
                    heappush(heap, (_neg_grlex(kk), kk))
            else:
                c = prev - qc * c2
                if mod > 0:
                    c = c % mod
                if c:
                    rem[kk] = c
                else:
                    del rem[kk]
    return quot


def exact_div_expvec(dict f, dict g, long mod):
    return _exact_div(f, g, mod, False)


def exact_div_parts(dict f, dict g, long mod):
    return _exact_div(f, g, mod, True)

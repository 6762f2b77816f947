"""Integer partitions and partition-indexed rendering helpers.

A partition is a tuple of positive integers sorted in weakly decreasing
order; the empty tuple is the (unique) partition of 0.  Partitions serve
as monomial keys both for products of elementary symmetric polynomials
(e_lambda) and for products of formal power-sum symbols (p_lambda).
"""

from __future__ import annotations

from typing import Iterable, Iterator


def normalized(parts: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted(parts, reverse=True))
    if any(p < 1 for p in out):
        raise ValueError(f"partition parts must be positive: {out}")
    return out


def weight(parts: tuple[int, ...]) -> int:
    return sum(parts)


def grade_key(parts: tuple[int, ...]):
    """Sort key for the graded partition order: weight first, then
    lexicographic comparison of the descending parts tuple.  The order is
    multiplicative under partition merge, which exact division relies on."""
    return (sum(parts), parts)


def merge(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Multiset union of two descending tuples, kept descending."""
    return tuple(sorted(a + b, reverse=True))


def multiplicities(parts: tuple[int, ...]) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in parts:
        out[p] = out.get(p, 0) + 1
    return out


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    out = []
    for i in range(1, parts[0] + 1):
        out.append(sum(1 for p in parts if p >= i))
    return tuple(out)


def partitions(m: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of m with parts bounded by max_part, descending parts."""
    if m < 0:
        return
    if max_part is None or max_part > m:
        max_part = m

    def rec(rest: int, bound: int, acc: list[int]):
        if rest == 0:
            yield tuple(acc)
            return
        for p in range(min(bound, rest), 0, -1):
            acc.append(p)
            yield from rec(rest - p, p, acc)
            acc.pop()

    yield from rec(m, max_part, [])


def partitions_with_parts_in(m: int, allowed: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Partitions of m whose parts all lie in the given set."""
    parts = sorted({p for p in allowed if 0 < p <= m}, reverse=True)

    def rec(rest: int, idx: int, acc: list[int]):
        if rest == 0:
            yield tuple(acc)
            return
        for i in range(idx, len(parts)):
            p = parts[i]
            if p > rest:
                continue
            acc.append(p)
            yield from rec(rest - p, i, acc)
            acc.pop()

    yield from rec(m, 0, [])


# -- rendering ----------------------------------------------------------


def render_product(parts: tuple[int, ...], symbol: str = "p") -> str:
    """Plain-text product, e.g. (2, 2, 1) -> "p2^2*p1"."""
    if not parts:
        return "1"
    out = []
    for p, mult in sorted(multiplicities(parts).items(), reverse=True):
        out.append(f"{symbol}{p}" if mult == 1 else f"{symbol}{p}^{mult}")
    return "*".join(out)


def render_latex(parts: tuple[int, ...], symbol: str = "e") -> str:
    """LaTeX product, e.g. (2, 1, 1) -> "e_2 e_1^{2}"."""
    if not parts:
        return "1"
    out = []
    for p, mult in sorted(multiplicities(parts).items(), reverse=True):
        out.append(f"{symbol}_{p}" if mult == 1 else f"{symbol}_{p}^{{{mult}}}")
    return " ".join(out)


def render_compact(parts: tuple[int, ...], symbol: str = "p") -> str:
    """Subscript shorthand with ascending parts, e.g. (4, 3, 3, 1) ->
    "p_{1334}".  Parts of ten or more are comma-separated."""
    if not parts:
        return "1"
    asc = sorted(parts)
    if asc[-1] <= 9:
        body = "".join(str(p) for p in asc)
    else:
        body = ",".join(str(p) for p in asc)
    return f"{symbol}_{{{body}}}"

"""Brute-force membership in the subalgebra generated by power sums.

Over a prime field F_r the power sums no longer generate all symmetric
polynomials, and membership questions become finite once graded: a
homogeneous symmetric polynomial of degree m can only be a combination
of products p_lambda with |lambda| = m, and in the e-basis that is a
plain linear system over F_r.  Since p_{kr} = p_k^r, generators with
index divisible by r are redundant, so the default generator set is the
coprime-to-r indices.

Also here: the support criterion (every partition in the e-expansion of
a power sum has a part coprime to r), the witness coefficient of
e_r^a e_b inside p_{ar+b}, and the strict-chain check that p_k is not
generated by p_1..p_{k-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import partitions as pt
from .ebasis import EExpansion, p_product_to_e, p_to_e, support_has_coprime_part
from .errors import InvalidRange, UnsupportedRing
from .rings import Coeff, RingSpec


@dataclass
class MembershipQuery:
    """Is the target symmetric polynomial an algebraic combination of the
    selected power sums?"""

    spec: RingSpec
    n: int
    target: EExpansion
    generator_indices: frozenset | None = None
    degree_bound: int | None = None

    def __post_init__(self):
        if self.spec.kind != "F":
            raise UnsupportedRing("membership queries run over a prime field")
        if self.target.n != self.n or self.target.spec != self.spec:
            raise ValueError("target context must match the query")

    def generators_for_degree(self, m: int) -> list:
        r = self.spec.characteristic()
        bound = self.degree_bound if self.degree_bound is not None else m
        if self.generator_indices is not None:
            return sorted(i for i in self.generator_indices if 0 < i <= bound)
        return [i for i in range(1, bound + 1) if gcd(i, r) == 1]


@dataclass
class MembershipAnswer:
    member: bool
    certificate: dict = field(default_factory=dict)
    spanning: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "certificate": [
                {"partition": list(k), "coeff": c.serialize()}
                for k, c in sorted(self.certificate.items(), key=lambda kv: pt.grade_key(kv[0]), reverse=True)
            ],
            "spanning": self.spanning,
        }


def _solve_field(columns: list, target: list, spec: RingSpec):
    """Solve sum_j x_j * columns[j] = target over a field.

    Returns (solution or None, rank); free variables are set to zero.
    Everything is dense and exact."""
    rows_n = len(target)
    cols_n = len(columns)
    a = [[columns[j][i] for j in range(cols_n)] for i in range(rows_n)]
    b = list(target)
    piv_rows = 0
    pivots = []
    for c in range(cols_n):
        pr = None
        for i in range(piv_rows, rows_n):
            if a[i][c] != spec.zero:
                pr = i
                break
        if pr is None:
            continue
        a[piv_rows], a[pr] = a[pr], a[piv_rows]
        b[piv_rows], b[pr] = b[pr], b[piv_rows]
        inv = spec.inv(a[piv_rows][c])
        a[piv_rows] = [spec.mul(inv, v) for v in a[piv_rows]]
        b[piv_rows] = spec.mul(inv, b[piv_rows])
        for i in range(rows_n):
            if i != piv_rows and a[i][c] != spec.zero:
                f = a[i][c]
                a[i] = [spec.sub(v, spec.mul(f, w)) for v, w in zip(a[i], a[piv_rows])]
                b[i] = spec.sub(b[i], spec.mul(f, b[piv_rows]))
        pivots.append((piv_rows, c))
        piv_rows += 1
    for i in range(piv_rows, rows_n):
        if b[i] != spec.zero:
            return None, len(pivots)
    x = [spec.zero] * cols_n
    for ri, c in pivots:
        x[c] = b[ri]
    return x, len(pivots)


def _homogeneous_components(g: EExpansion) -> dict:
    comps: dict = {}
    for parts, c in g.terms.items():
        comps.setdefault(pt.weight(parts), {})[parts] = c
    return {
        m: EExpansion(g.n, g.spec, terms) for m, terms in sorted(comps.items())
    }


def membership(q: MembershipQuery) -> MembershipAnswer:
    """Degree-by-degree exact linear solve.

    Inhomogeneous targets are split into homogeneous components; each
    component must be expressible on its own (the subalgebra is graded).
    Non-membership at the exact degree is genuine non-membership."""
    spec, n = q.spec, q.n
    if q.target.is_zero:
        return MembershipAnswer(True, {}, {"slice_dim": 0, "span_rank": 0, "generators": 0})
    certificate: dict = {}
    slice_dims = []
    ranks = []
    gens_used = 0
    for m, component in _homogeneous_components(q.target).items():
        if m == 0:
            certificate[()] = component.coefficient(())
            continue
        basis = sorted(pt.partitions(m, max_part=n), key=pt.grade_key, reverse=True)
        index = {parts: i for i, parts in enumerate(basis)}
        gens = q.generators_for_degree(m)
        cands = list(pt.partitions_with_parts_in(m, gens))
        columns = []
        for lam in cands:
            vec = [spec.zero] * len(basis)
            for parts, c in p_product_to_e(lam, n, spec).terms.items():
                vec[index[parts]] = c
            columns.append(vec)
        target_vec = [spec.zero] * len(basis)
        for parts, c in component.terms.items():
            target_vec[index[parts]] = c
        solution, rank = _solve_field(columns, target_vec, spec)
        slice_dims.append(len(basis))
        ranks.append(rank)
        gens_used += len(cands)
        if solution is None:
            return MembershipAnswer(
                False, {}, {
                    "slice_dim": len(basis),
                    "span_rank": rank,
                    "generators": len(cands),
                    "degree": m,
                })
        for lam, c in zip(cands, solution):
            if c != spec.zero:
                certificate[lam] = Coeff(spec, c)
    return MembershipAnswer(
        True,
        certificate,
        {
            "slice_dim": max(slice_dims) if slice_dims else 0,
            "span_rank": max(ranks) if ranks else 0,
            "generators": gens_used,
        },
    )


def certificate_expansion(answer: MembershipAnswer, n: int, spec: RingSpec) -> EExpansion:
    """Re-expand a positive certificate back into the e-basis (the
    soundness check: this must equal the original target)."""
    acc = EExpansion.zero(n, spec)
    for lam, c in answer.certificate.items():
        if lam == ():
            acc = acc + EExpansion.constant(c, n, spec)
        else:
            acc = acc + p_product_to_e(lam, n, spec) * c
    return acc


def coprime_part_check(m: int, spec: RingSpec, n: int) -> bool:
    """True iff every partition in the support of p_m (in the e-basis)
    has at least one part coprime to the characteristic."""
    r = spec.characteristic()
    if r == 0:
        raise UnsupportedRing("the support criterion concerns positive characteristic")
    if m % r == 0:
        raise InvalidRange(f"{m} is divisible by {r}; reduce via p_(kr) = p_k^r first")
    return support_has_coprime_part(p_to_e(m, n, spec), r)


def witness_coefficient(k: int, spec: RingSpec, n: int | None = None) -> Coeff:
    """Coefficient of e_r^a e_b in the e-expansion of p_k, for k = a*r + b
    with 0 < b < r.  This single monomial obstructs p_k from being
    generated by lower power sums; it always equals (-1)^(a+1)."""
    r = spec.characteristic()
    if r == 0:
        raise UnsupportedRing("the witness concerns positive characteristic")
    if k % r == 0:
        raise InvalidRange(f"{k} is divisible by {r}")
    a, b = divmod(k, r)
    if n is None:
        n = r
    if n < r:
        raise InvalidRange(f"need n >= {r} so that e_{r} survives truncation")
    lam = tuple([r] * a + [b])
    return p_to_e(k, n, spec).coefficient(lam)


def chain_gap_check(k: int, spec: RingSpec, n: int, degree_bound: int | None = None) -> bool:
    """True iff p_k is not an algebraic combination of p_1..p_{k-1}
    (checked at degree k, which is the only degree that matters)."""
    r = spec.characteristic()
    if r == 0:
        raise UnsupportedRing("the chain is strict only in positive characteristic")
    if k % r == 0:
        raise InvalidRange(f"{k} is divisible by {r}")
    if n < r:
        raise InvalidRange(f"need n >= {r}")
    gens = frozenset(i for i in range(1, k) if gcd(i, r) == 1)
    q = MembershipQuery(
        spec, n, p_to_e(k, n, spec), generator_indices=gens,
        degree_bound=degree_bound if degree_bound is not None else k)
    return not membership(q).member

"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 mathematically negative
result (non-membership, indeterminate characteristic polynomial, failed
verification).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import engine, subalgebra
from .charpoly import TraceSequence, charpoly_from_traces, simulate_traces
from .ebasis import EExpansion, p_to_e
from .errors import Indeterminate, PowsymError
from .multipoly import MPoly, elementary
from .rings import Coeff, RingSpec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; keep 2 for math negatives
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(f"error: {message}") from None


class _UsageError(Exception):
    pass


def _ring(text: str) -> RingSpec:
    try:
        return RingSpec.parse(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _emit(doc: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(doc if doc.endswith("\n") else doc + "\n")
    else:
        print(doc)


# -- express ------------------------------------------------------------


def _cmd_express(args) -> int:
    spec = _ring(args.ring)
    formula = engine.express_e(args.k, args.n, spec, inline_lower=not args.mixed)
    verified = None
    if not args.no_verify:
        verified = engine.verify_formula(formula)
    if args.format == "json":
        _emit(json.dumps(formula.to_json(), indent=2), args.output)
    elif args.format == "latex":
        body = formula.value.latex()
        note = "" if verified is None else f"  % verified: {verified}"
        _emit(f"e_{{{args.k}}}^{{({args.n})}} = {body}{note}", args.output)
    else:
        status = "" if verified is None else f"   [verified: {verified}]"
        shorthand = formula.value.render(compact=args.compact)
        _emit(f"e_{args.k}({args.n} vars, {spec}) = {shorthand}{status}", args.output)
    if verified is False:
        return EXIT_NEGATIVE
    return EXIT_OK


# -- verify-sweep ----------------------------------------------------------


def _cmd_verify_sweep(args) -> int:
    specs = [_ring(t) for t in args.rings.split(",") if t.strip()]
    rows = list(engine.soundness_sweep(specs, args.max_n))
    if args.format == "json":
        doc = [
            {
                "k": r.k, "n": r.n, "ring": str(r.spec),
                "verified": r.verified, "denominator": r.denominator,
                "seconds": round(r.seconds, 4),
            }
            for r in rows
        ]
        _emit(json.dumps(doc, indent=2), args.output)
    else:
        lines = [f"{'k':>3} {'n':>3} {'ring':>6} {'verified':>9} {'denominator':>16} {'time':>9}"]
        for r in rows:
            k, n, ring, ok, den, dt = r.row()
            lines.append(f"{k:>3} {n:>3} {ring:>6} {str(ok):>9} {den:>16} {dt:>9}")
        good = sum(1 for r in rows if r.verified)
        lines.append(f"verified {good}/{len(rows)} formulas")
        _emit("\n".join(lines), args.output)
    return EXIT_OK if all(r.verified for r in rows) else EXIT_NEGATIVE


# -- hankel-det ----------------------------------------------------------------


def _cmd_hankel_det(args) -> int:
    spec = _ring(args.ring)
    det = engine.hankel_det_mpoly(args.d, args.n, spec)
    lines = [f"det P_{{{args.d},{args.n}}} over {spec} = {det}"]
    code = EXIT_OK
    if args.d > args.n:
        ok = det.is_zero
        lines.append(f"vanishes for d > n: {ok}")
        code = EXIT_OK if ok else EXIT_NEGATIVE
    elif args.d == args.n:
        n = args.n
        vand = elementary(0, n, spec)  # 1
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                vand = vand * (MPoly.variable(i, n, spec) - MPoly.variable(j, n, spec))
        target = elementary(n, n, spec) * vand * vand
        ok = det == target
        lines.append(f"equals e_{n} * Vandermonde^2: {ok}")
        code = EXIT_OK if ok else EXIT_NEGATIVE
    if args.format == "json":
        _emit(json.dumps({"d": args.d, "n": args.n, "ring": str(spec),
                          "det": det.to_json(), "notes": lines[1:]}, indent=2),
              args.output)
    else:
        _emit("\n".join(lines), args.output)
    return code


# -- charpoly --------------------------------------------------------------------


def _parse_values(text: str, spec: RingSpec) -> list:
    out = []
    for pos, chunk in enumerate(text.split(","), 1):
        chunk = chunk.strip()
        if not chunk:
            raise _UsageError(f"empty trace at position {pos}")
        try:
            out.append(Coeff.parse(spec, chunk))
        except (ValueError, ArithmeticError):
            raise _UsageError(f"bad value {chunk!r} at position {pos}") from None
    return out


def _cmd_charpoly(args) -> int:
    spec = _ring(args.ring)
    traces = _parse_values(args.traces, spec)
    seq = TraceSequence(spec, args.n, traces)
    try:
        ch = charpoly_from_traces(seq)
    except Indeterminate as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    if args.format == "json":
        _emit(json.dumps(ch.to_json(), indent=2), args.output)
    else:
        prov = ", ".join(f"e{k}: {v}" for k, v in sorted(ch.provenance.items()))
        _emit(f"{ch}\n  provenance: {prov}", args.output)
    return EXIT_OK


# -- traces-of --------------------------------------------------------------------


def _cmd_traces_of(args) -> int:
    spec = _ring(args.ring)
    text = args.matrix
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"matrix is not valid JSON: {exc}") from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise _UsageError("matrix must be a JSON 2-D array")
    seq = simulate_traces(rows, spec, horizon=args.horizon)
    if args.format == "json":
        _emit(json.dumps(seq.to_json(), indent=2), args.output)
    else:
        _emit(", ".join(str(t) for t in seq.traces), args.output)
    return EXIT_OK


# -- membership ---------------------------------------------------------------------


def _parse_target(text: str, n: int, spec: RingSpec) -> EExpansion:
    """Parse sums of signed terms like "e2", "2*e1*e2^2", "p5"."""
    s = text.replace(" ", "")
    if not s:
        raise _UsageError("empty target")
    terms = []
    buf = ""
    sign = 1
    i = 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    start_sign = sign
    while i <= len(s):
        if i == len(s) or s[i] in "+-":
            terms.append((start_sign, buf))
            if i < len(s):
                start_sign = -1 if s[i] == "-" else 1
                buf = ""
        else:
            buf += s[i]
        i += 1
    acc = EExpansion.zero(n, spec)
    for sgn, term in terms:
        if not term:
            raise _UsageError(f"dangling sign in target {text!r}")
        factor = EExpansion.constant(sgn, n, spec)
        for atom in term.split("*"):
            base, _, exp = atom.partition("^")
            e = 1
            if exp:
                if not exp.isdigit():
                    raise _UsageError(f"bad exponent in {atom!r}")
                e = int(exp)
            if base.isdigit():
                factor = factor * EExpansion.constant(int(base) ** e, n, spec)
            elif base.startswith("e") and base[1:].isdigit():
                factor = factor * EExpansion.generator(int(base[1:]), n, spec) ** e
            elif base.startswith("p") and base[1:].isdigit():
                factor = factor * p_to_e(int(base[1:]), n, spec) ** e
            else:
                raise _UsageError(f"cannot parse target atom {atom!r}")
        acc = acc + factor
    return acc


def _cmd_membership(args) -> int:
    spec = _ring(args.ring)
    target = _parse_target(args.target, args.n, spec)
    gens = None
    if args.generators:
        try:
            gens = frozenset(int(x) for x in args.generators.split(","))
        except ValueError:
            raise _UsageError("generators must be a comma-separated list of integers") from None
    query = subalgebra.MembershipQuery(
        spec, args.n, target, generator_indices=gens, degree_bound=args.degree_bound)
    answer = subalgebra.membership(query)
    if args.format == "json":
        _emit(json.dumps({"target": args.target, **answer.to_json()}, indent=2),
              args.output)
    else:
        lines = []
        if answer.member:
            cert = " + ".join(
                f"{c}*{_render_p(lam)}" for lam, c in sorted(
                    answer.certificate.items(), reverse=True))
            lines.append(f"{args.target} IS a member: {args.target} = {cert or '0'}")
        else:
            lines.append(f"{args.target} is NOT a member of {spec}[p_k]")
        if args.verbose or not answer.member:
            lines.append(f"  spanned slice: {answer.spanning}")
        _emit("\n".join(lines), args.output)
    return EXIT_OK if answer.member else EXIT_NEGATIVE


def _render_p(lam) -> str:
    from . import partitions as pt

    return pt.render_product(lam, "p") if lam else "1"


# -- witness -------------------------------------------------------------------------


def _cmd_witness(args) -> int:
    spec = _ring(args.ring)
    r = spec.characteristic()
    if r == 0:
        raise _UsageError("witness requires a prime field ring (F2, F3, ...)")
    coeff = subalgebra.witness_coefficient(args.k, spec, args.n)
    a, b = divmod(args.k, r)
    expected = Coeff.of(spec, (-1) ** (a + 1))
    lam = tuple([r] * a + [b])
    ok = coeff == expected
    if args.format == "json":
        _emit(json.dumps({
            "k": args.k, "ring": str(spec), "partition": list(lam),
            "coefficient": coeff.serialize(), "expected": expected.serialize(),
            "match": ok}, indent=2), args.output)
    else:
        _emit(
            f"coefficient of {_render_p(lam).replace('p', 'e')} in p_{args.k} "
            f"over {spec}: {coeff} (expected (-1)^{a + 1} = {expected}) "
            f"{'ok' if ok else 'MISMATCH'}", args.output)
    return EXIT_OK if ok else EXIT_NEGATIVE


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="powsym",
        description="Elementary symmetric polynomials as rational functions "
                    "of power sums, in any characteristic.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices=("text", "json")):
        p.add_argument("--format", choices=fmt_choices, default="text")
        p.add_argument("--output", help="write the result to a file instead of stdout")

    p = sub.add_parser("express", help="synthesize e_k as a fraction of power sums")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mixed", action="store_true",
                   help="keep lower elementary values formal (E_i) instead of inlining")
    p.add_argument("--compact", action="store_true",
                   help="subscript shorthand p_{134} in text output")
    p.add_argument("--no-verify", action="store_true")
    common(p, ("text", "latex", "json"))
    p.set_defaults(func=_cmd_express)

    p = sub.add_parser("verify-sweep", help="certificate-check a grid of formulas")
    p.add_argument("--rings", default="Z,F2,F3,F5")
    p.add_argument("--max-n", type=int, default=5)
    common(p)
    p.set_defaults(func=_cmd_verify_sweep)

    p = sub.add_parser("hankel-det", help="expand the power-sum Hankel determinant")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ring", default="Z")
    common(p)
    p.set_defaults(func=_cmd_hankel_det)

    p = sub.add_parser("charpoly", help="characteristic polynomial from traces")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--traces", required=True, help="comma-separated Tr(T^d) values")
    common(p)
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("traces-of", help="trace sequence of a concrete matrix")
    p.add_argument("--ring", required=True)
    p.add_argument("--matrix", required=True,
                   help="JSON 2-D array, @file, or - for stdin")
    p.add_argument("--horizon", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_traces_of)

    p = sub.add_parser("membership", help="is a symmetric polynomial generated by power sums?")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", required=True, help='e.g. "e2", "e1*e2", "p5"')
    p.add_argument("--generators", help="restrict to these power-sum indices")
    p.add_argument("--degree-bound", type=int, default=None)
    p.add_argument("--verbose", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_membership)

    p = sub.add_parser("witness", help="the obstruction coefficient inside p_k")
    p.add_argument("--ring", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_witness)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_USAGE
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PowsymError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

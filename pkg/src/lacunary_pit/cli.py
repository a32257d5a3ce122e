"""Command-line front end.

Every command prints line-delimited JSON (the hit-set command prints the
plain-text hitting-set format).  Exit codes: 0 ran to completion (whatever
the verdict), 2 input error, 3 size-guard rejection.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import heights, hitting, oracle, tester
from .cyclo import DEFAULT_SIZE_GUARD
from .expression import (DocumentError, Expression, SizeGuardError,
                         format_rational, parse_natural, parse_rational)
from .numtheory import primes_at_least

EXIT_OK, EXIT_INPUT, EXIT_GUARD = 0, 2, 3


class InputError(Exception):
    def __init__(self, message: str, **where):
        super().__init__(message)
        self.where = where


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _load_expression(path: str) -> Expression:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, line=exc.lineno, column=exc.colno) from None
    try:
        return Expression.from_document(doc)
    except DocumentError as exc:
        raise InputError(str(exc), field=exc.field) from None


def _constant(args) -> hitting.GapConstant:
    if args.constant_log2_lower is None:
        return hitting.C_DEFAULT
    try:
        value = parse_rational(args.constant_log2_lower)
    except ValueError as exc:
        raise InputError(str(exc), flag="--constant-log2-lower") from None
    if value <= 0:
        raise InputError("must be positive", flag="--constant-log2-lower")
    return hitting.GapConstant(value, "command line")


def _prime_list(text: str, flag: str) -> list[int]:
    try:
        return [parse_natural(v.strip()) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise InputError(str(exc), flag=flag) from None


def _verdict_json(v: tester.Verdict) -> dict:
    return {"verdict": v.result, "witness": v.witness, "mode": v.mode, "params": v.params}


def cmd_zero_test(args) -> int:
    expr = _load_expression(args.file)
    C = _constant(args)
    guard = args.size_guard
    if args.mode == "structural":
        verdict = tester.structural_zero_test(expr, C, guard)
    elif args.mode == "oracle":
        poly = oracle.expand_to_sparse(expr, args.term_limit)
        nf = tester.normalize(expr, guard)
        verdict = tester.Verdict(tester.ZERO if poly.is_zero() else tester.NONZERO,
                                 "oracle", params=tester._verdict_params(nf, None))
    elif args.mode == "blackbox":
        if args.hitset:
            spec = _load_hitset(args.hitset)
        else:
            p = tester.normalize(expr, guard).params()
            spec = hitting.build_rou_hitting_set(p["t"], p["d"], p["d_prime"], p["M"], C)
        verdict = tester.blackbox_zero_test(expr, spec, guard, C, exhaustive=args.exhaustive)
    else:
        if args.hitset:
            spec = _load_hitset(args.hitset)
        else:
            nf = tester.normalize(expr, guard)
            spec = hitting.build_real_hitting_set(max(nf.t, 0), sparse=nf.kind != tester.SHIFTED)
        verdict = tester.real_point_zero_test(expr, spec, guard, exhaustive=args.exhaustive)
    _emit(_verdict_json(verdict))
    return EXIT_OK


def _load_hitset(path: str) -> hitting.HittingSetSpec:
    try:
        with open(path) as fh:
            return hitting.HittingSetSpec.from_text(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except ValueError as exc:
        raise InputError(str(exc), file=path) from None


def cmd_hitset(args) -> int:
    if args.kind == "real":
        sys.stdout.write(hitting.build_real_hitting_set(args.t).to_text())
        return EXIT_OK
    missing = [n for n in ("d", "d_prime", "M") if getattr(args, n) is None]
    if missing:
        raise InputError("roots-of-unity sets need t, d, d' and M", missing=missing)
    if args.M == 0:
        raise InputError("M must be >= 1", field="M")
    spec = hitting.build_rou_hitting_set(args.t, args.d, args.d_prime, args.M, _constant(args))
    sys.stdout.write(spec.to_text())
    return EXIT_OK


def cmd_gaps(args) -> int:
    expr = _load_expression(args.file)
    nf, gaps = tester.decompose(expr, _constant(args), args.size_guard)
    _emit({
        "form": nf.kind,
        "delta": gaps.delta,
        "stripped_beta": str(nf.stripped_beta),
        "betas": [str(t.beta) for t in nf.expr.terms],
        "blocks": [[b.start, b.stop] for b in gaps.blocks],
    })
    return EXIT_OK


def cmd_height(args) -> int:
    expr = _load_expression(args.file)
    c = expr.coefficients
    if not any(c):
        raise InputError("projective height of an all-zero coefficient tuple is undefined",
                         field="terms")
    _emit({
        "H": heights.projective_height(c),
        "per_term": [heights.rational_height(x) for x in c],
        "poly_height_bound": heights.poly_height_bound(c),
        "shift_pair_excluded": heights.is_excluded_pair(expr.a, expr.b),
    })
    return EXIT_OK


def cmd_refute(args) -> int:
    expr = _load_expression(args.file)
    targets = _prime_list(args.targets, "--targets")
    try:
        r = tester.refute_representation(expr, targets, args.size_guard, extra=args.extra)
    except SizeGuardError:
        raise
    except ValueError as exc:
        raise InputError(str(exc), flag="--targets") from None
    _emit({"status": r.status, "witness": r.witness,
           "checked_primes": list(r.checked_primes), "confirmed_equal": r.confirmed_equal})
    return EXIT_OK


def cmd_certify(args) -> int:
    if args.targets:
        targets = _prime_list(args.targets, "--targets")
    elif args.count is not None:
        C = _constant(args)
        dl = hitting.delta(args.t, args.M, C)
        start = max(5, hitting.sparsity_bound(args.t, dl) + 1)
        targets = primes_at_least(start, args.count)
    else:
        raise InputError("give --targets or --count", flag="--targets")
    try:
        cert = tester.lower_bound_params(targets, args.t, args.M, _constant(args))
    except ValueError as exc:
        raise InputError(str(exc), flag="--targets") from None
    _emit({"certified": cert.certified, "t": cert.t, "M": str(cert.M), "delta": cert.delta,
           "prime_count": cert.prime_count, "d_max": str(cert.d_max),
           "d_plus_d_prime_max": str(cert.sum_max), "statement": cert.statement()})
    return EXIT_OK


def prop1_sweep(orders, max_num: int, precision: float = 1e-12) -> dict:
    """Smallest numeric height of a + b*theta over non-excluded small rationals."""
    values = sorted({Fraction(n, d) for n in range(-max_num, max_num + 1)
                     for d in range(1, max_num + 1)})
    best = None
    pairs = 0
    for n in orders:
        for a in values:
            for b in values:
                if heights.is_excluded_pair(a, b):
                    continue
                pairs += 1
                h = heights.algebraic_height_numeric(a, b, n, precision)
                if best is None or h < best[0]:
                    best = (h, n, a, b)
    h, n, a, b = best
    return {"orders": list(orders), "max_num": max_num, "pairs": pairs,
            "min_height": h, "argmin": {"order": n, "a": format_rational(a), "b": format_rational(b)}}


def cmd_verify_heights(args) -> int:
    orders = _prime_list(args.orders, "--orders")
    if not orders or any(n < 1 for n in orders):
        raise InputError("orders must be positive", flag="--orders")
    report = prop1_sweep(orders, args.max_num)
    bound = 2 ** float(hitting.C_DEFAULT.c_log2_lower)
    report["constant"] = 5 ** (1 / 12)
    report["constant_from_log2_lower"] = bound
    report["holds"] = report["min_height"] >= report["constant"] - 1e-9
    report["sixth_root_exception"] = heights.algebraic_height_numeric(1, 1, 3)
    _emit(report)
    return EXIT_OK


def cmd_bench(args) -> int:
    from . import bench

    suites = bench.SUITES
    if args.suite not in suites and args.suite != "all":
        raise InputError(f"unknown suite {args.suite!r}; choose from {sorted(suites)} or all",
                         flag="--suite")
    names = sorted(suites) if args.suite == "all" else [args.suite]
    for name in names:
        for row in suites[name]():
            _emit(row)
    return EXIT_OK


def _natural(text: str) -> int:
    try:
        return parse_natural(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lacunary-pit",
                                     description="Identity testing for sum c X^alpha (a+bX)^beta.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, guard=True):
        p.add_argument("--constant-log2-lower", default=None,
                       help="rational lower bound on log2(C) (default 193/1000)")
        if guard:
            p.add_argument("--size-guard", type=_natural, default=DEFAULT_SIZE_GUARD,
                           help="max exponent bit-length for exact expansion")

    p = sub.add_parser("zero-test", help="decide whether an expression is identically zero")
    p.add_argument("file")
    p.add_argument("--mode", choices=["structural", "blackbox", "real", "oracle"],
                   default="structural")
    p.add_argument("--hitset", help="hitting-set file (blackbox/real modes)")
    p.add_argument("--exhaustive", action="store_true",
                   help="evaluate every point even after the outcome is implied")
    p.add_argument("--term-limit", type=_natural, default=oracle.DEFAULT_TERM_LIMIT)
    common(p)
    p.set_defaults(func=cmd_zero_test)

    p = sub.add_parser("hitset", help="construct a hitting set")
    p.add_argument("t", type=_natural)
    p.add_argument("d", type=_natural, nargs="?")
    p.add_argument("d_prime", type=_natural, nargs="?")
    p.add_argument("M", type=_natural, nargs="?")
    p.add_argument("--kind", choices=["rou", "real"], default="rou")
    common(p, guard=False)
    p.set_defaults(func=cmd_hitset)

    p = sub.add_parser("gaps", help="show the gap decomposition")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("height", help="projective and per-term coefficient heights")
    p.add_argument("file")
    p.set_defaults(func=cmd_height)

    p = sub.add_parser("refute", help="test whether an expression can equal prod (X^p - 1)")
    p.add_argument("file")
    p.add_argument("--targets", required=True, help="comma-separated primes")
    p.add_argument("--extra", type=_natural, default=3, help="extra comparison primes")
    p.add_argument("--size-guard", type=_natural, default=DEFAULT_SIZE_GUARD)
    p.set_defaults(func=cmd_refute)

    p = sub.add_parser("certify", help="lower-bound certificate for prod (X^p - 1)")
    p.add_argument("--t", type=_natural, required=True)
    p.add_argument("--M", type=_natural, default=1)
    p.add_argument("--targets", help="comma-separated primes")
    p.add_argument("--count", type=_natural, help="use this many primes above the sparsity bound")
    common(p, guard=False)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify-heights", help="numeric sweep of the height lower bound")
    p.add_argument("--orders", default="5,7,11,13,17")
    p.add_argument("--max-num", type=_natural, default=10)
    p.set_defaults(func=cmd_verify_heights)

    p = sub.add_parser("bench", help="timing table")
    p.add_argument("--suite", default="all")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(json.dumps({"error": str(exc), **exc.where}), file=sys.stderr)
        return EXIT_INPUT
    except SizeGuardError as exc:
        print(json.dumps({"error": str(exc), "kind": "size_guard"}), file=sys.stderr)
        return EXIT_GUARD
    except hitting.SpecTooSmall as exc:
        print(json.dumps({"error": str(exc), "kind": "hitset_too_small"}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

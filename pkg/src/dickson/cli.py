"""Command-line front door.

Subcommands: eval, table, verify, brewer, permcheck, bench.  Results go
to standard output, diagnostics (including suite timings) to standard
error.  Exit codes: 0 success, 1 verification failure, 2 usage or input
error.  Identical argument vectors and seeds produce byte-identical
standard output; the one exception is `verify --format json`, whose
reports carry their measured elapsed_ms.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from .families import (
    dickson_eval_fast,
    dickson_kind,
    dickson_kind_closed,
    dickson_kind_eval_fast,
    dickson_kind_sequence,
    family_terms,
)
from .numtheory import brewer_sum, is_permutation, monomial_permutation
from .poly import poly_eval, render_human, render_latex
from .rings import GF, QQ, ZZ, BoundExceededError, Ring, RingMismatchError, is_prime
from .verify import SUITE_IDS, run_suites


class CliInputError(ValueError):
    pass


def _add_ring_flags(sp: argparse.ArgumentParser):
    sp.add_argument("--ring", required=True, choices=["int", "rat", "fp", "fq"],
                    help="coefficient ring: int, rat, fp --p P, or fq --p P --m M")
    sp.add_argument("--p", type=int, help="characteristic for fp/fq rings")
    sp.add_argument("--m", type=int, help="extension degree for fq rings")


def _resolve_ring(args) -> Ring:
    if args.ring == "int":
        return ZZ
    if args.ring == "rat":
        return QQ
    if args.p is None:
        raise CliInputError(f"--ring {args.ring} requires --p")
    if not is_prime(args.p):
        raise CliInputError(f"--p {args.p} is not prime")
    if args.ring == "fp":
        return GF(args.p)
    if args.m is None or args.m < 1:
        raise CliInputError("--ring fq requires --m >= 1")
    return GF(args.p ** args.m)


def _symbolic_human(terms: list[tuple[int, int, int]]) -> str:
    if not terms:
        return "0"
    parts = []
    for c, apow, xpow in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        factors = []
        if mag != 1 or (apow == 0 and xpow == 0):
            factors.append(str(mag))
        if apow:
            factors.append("a" if apow == 1 else f"a^{apow}")
        if xpow:
            factors.append("x" if xpow == 1 else f"x^{xpow}")
        body = "*".join(factors)
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def _symbolic_latex(terms: list[tuple[int, int, int]]) -> str:
    if not terms:
        return "0"
    parts = []
    for c, apow, xpow in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = ""
        if mag != 1 or (apow == 0 and xpow == 0):
            body += str(mag)
        if apow:
            body += "a" if apow == 1 else f"a^{{{apow}}}"
        if xpow:
            body += "x" if xpow == 1 else f"x^{{{xpow}}}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign}{body}")
    return "".join(parts)


def _cmd_eval(args) -> int:
    ring = _resolve_ring(args)
    x = ring.parse(args.x)
    a = ring.parse(args.a)
    n, k = args.n, args.kind
    if args.method == "recurrence":
        value = poly_eval(dickson_kind(n, k, a), x)
    elif args.method == "closed":
        value = poly_eval(dickson_kind_closed(n, k, a), x)
    else:
        value = dickson_eval_fast(n, x, a) if k == 0 else dickson_kind_eval_fast(n, k, x, a)
    print(ring.render(value))
    return 0


def _cmd_table(args) -> int:
    ring = _resolve_ring(args)
    n_max, k, fmt = args.n_max, args.kind, args.format
    if n_max < 0:
        raise CliInputError("--n-max must be nonnegative")
    if args.a is None:
        if fmt in ("csv", "json"):
            raise CliInputError(f"table --format {fmt} requires --a (symbolic a is only "
                                "rendered in human and latex modes)")
        for n in range(n_max + 1):
            terms = family_terms(n, k)
            if fmt == "latex":
                print(f"D_{{{n}}}(x,a) = {_symbolic_latex(terms)}")
            else:
                print(f"D_{n}(x, a) = {_symbolic_human(terms)}")
        return 0
    a = ring.parse(args.a)
    seq = dickson_kind_sequence(n_max, k, a)
    if fmt == "human":
        for n, poly in enumerate(seq):
            print(f"D_{n}(x, a) = {render_human(poly)}")
    elif fmt == "latex":
        for n, poly in enumerate(seq):
            print(f"D_{{{n}}}(x,a) = {render_latex(poly)}")
    elif fmt == "csv":
        print("n," + ",".join(f"c{j}" for j in range(n_max, -1, -1)))
        for n, poly in enumerate(seq):
            cs = [ring.render(poly.coefficient(j)) for j in range(n_max, -1, -1)]
            print(f"{n}," + ",".join(cs))
    else:
        rows = [
            {"n": n, "coefficients": [ring.render(c) for c in poly.coeffs]}
            for n, poly in enumerate(seq)
        ]
        doc = {"kind": k, "a": ring.render(a), "ring": repr(ring), "n_max": n_max, "rows": rows}
        print(json.dumps(doc, sort_keys=True))
    return 0


def _cmd_verify(args) -> int:
    reports = run_suites(args.suite, args.seed, args.trials)
    total_failures = sum(r.failures for r in reports)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            status = "PASS" if r.failures == 0 else "FAIL"
            print(f"suite={r.suite} seed={r.seed} trials={r.trials} "
                  f"failures={r.failures} result={status}")
            if r.counterexample is not None:
                cex = r.counterexample
                rendered = " ".join(f"{key}={val}" for key, val in cex.inputs.items())
                print(f"  counterexample: {rendered}")
                print(f"  lhs: {cex.lhs}")
                print(f"  rhs: {cex.rhs}")
        if len(reports) > 1:
            status = "PASS" if total_failures == 0 else "FAIL"
            print(f"overall seed={args.seed} suites={len(reports)} "
                  f"failures={total_failures} result={status}")
    for r in reports:
        print(f"# suite={r.suite} elapsed_ms={r.elapsed_ms}", file=sys.stderr)
    return 0 if total_failures == 0 else 1


def _cmd_brewer(args) -> int:
    if args.all_a:
        print("a,lambda")
        for a in range(args.p):
            print(f"{a},{brewer_sum(args.p, args.n, a)}")
    else:
        print(brewer_sum(args.p, args.n, int(args.a)))
    return 0


def _cmd_permcheck(args) -> int:
    q, n_max = args.q, args.n_max
    field = GF(q)
    if args.a is not None:
        a_values = [field.parse(args.a)]
    else:
        a_values = [a for a in field.elements() if a]
    print("n,a,is_perm,gcd,agree")
    for n in range(1, n_max + 1):
        for a in a_values:
            if a:
                v = is_permutation(n, a, q)
            else:
                v = monomial_permutation(n, q)
            print(f"{n},{field.render(a)},{int(v.is_permutation)},{v.gcd_value},{int(v.agreement)}")
    return 0


def _cmd_bench(args) -> int:
    ring = _resolve_ring(args)
    try:
        n_list = [int(s) for s in args.n_list.split(",") if s]
    except ValueError:
        raise CliInputError(f"--n-list must be comma-separated integers, got {args.n_list!r}")
    if not n_list:
        raise CliInputError("--n-list is empty")
    records = bench_mod.run_bench(n_list, ring, reps=args.reps,
                                  compare_backends=args.compare_backends)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in records], indent=2, sort_keys=True))
    else:
        print(bench_mod.render_csv(records))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dickson",
        description="Exact Dickson polynomial arithmetic over Z, Q, GF(p), GF(p^m)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one D_{n,k}(x, a)")
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--kind", type=int, default=0, metavar="K",
                        help="kind offset k (0 = first kind)")
    p_eval.add_argument("--x", required=True, help="evaluation point (integer or num/den)")
    p_eval.add_argument("--a", required=True, help="family parameter (integer or num/den)")
    _add_ring_flags(p_eval)
    p_eval.add_argument("--method", choices=["recurrence", "closed", "matrix"],
                        default="matrix")
    p_eval.set_defaults(func=_cmd_eval)

    p_table = sub.add_parser("table", help="tabulate D_{0..n_max}")
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--a", help="family parameter; omit for symbolic a "
                                     "(human/latex formats only)")
    _add_ring_flags(p_table)
    p_table.add_argument("--kind", type=int, default=0, metavar="K")
    p_table.add_argument("--format", choices=["human", "csv", "json", "latex"],
                         default="human")
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run identity verification suites")
    p_verify.add_argument("--suite", required=True, choices=["all"] + SUITE_IDS)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=None,
                          help="override per-suite sample counts")
    p_verify.add_argument("--format", choices=["human", "json"], default="human")
    p_verify.set_defaults(func=_cmd_verify)

    p_brewer = sub.add_parser("brewer", help="Brewer character sums Lambda_n(a) over GF(p)")
    p_brewer.add_argument("--p", type=int, required=True)
    p_brewer.add_argument("--n", type=int, required=True)
    group = p_brewer.add_mutually_exclusive_group(required=True)
    group.add_argument("--a", help="single parameter value")
    group.add_argument("--all-a", action="store_true", help="CSV of all a mod p")
    p_brewer.set_defaults(func=_cmd_brewer)

    p_perm = sub.add_parser("permcheck",
                            help="empirical permutation check vs gcd criterion, CSV")
    p_perm.add_argument("--q", type=int, required=True, help="field size (prime power)")
    p_perm.add_argument("--n-max", type=int, required=True)
    group = p_perm.add_mutually_exclusive_group()
    group.add_argument("--a", help="single parameter value")
    group.add_argument("--all-a", action="store_true",
                       help="all nonzero a (the default)")
    p_perm.set_defaults(func=_cmd_permcheck)

    p_bench = sub.add_parser("bench", help="time the evaluation strategies")
    p_bench.add_argument("--n-list", required=True, help="comma-separated degrees")
    _add_ring_flags(p_bench)
    p_bench.add_argument("--reps", type=int, default=5)
    p_bench.add_argument("--format", choices=["csv", "json"], default="csv")
    p_bench.add_argument("--compare-backends", action="store_true",
                         help="also time both kernel backends (fp rings)")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, RingMismatchError, BoundExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command line front end: ``regdiv <command> [options]``.

Commands:
    seq          emit s(1..count)                    (plain, csv, json, bfile)
    verify       occurrence counts vs tau(m*m+1)     (plain, csv, json)
    tree         divisor-pair tree export            (json, dot)
    occurrences  indices of one value m, both routes (plain, json)
    fib          Fibonacci path table                (plain, csv)
    primes       n <= max-n with n*n+1 prime         (plain)
    plot         (n, s(n)) series                    (csv, svg)

Exit codes: 0 success / all checks pass, 1 verification mismatch,
2 usage error, 3 resource limit exceeded.

Size caps default to max-m 22, tree depth 20, count 2**24; override with
the REGDIV_MAX_M / REGDIV_MAX_DEPTH / REGDIV_MAX_COUNT environment
variables or the --cap-m / --cap-depth / --cap-count flags (flags win).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import TextIO

from . import analysis, pairtree, svgplot
from .divisors import divisors, is_prime
from .errors import ConsistencyError, ResourceLimitError
from .sequence import DEFAULT_MAX_COUNT, SequenceEvaluator, s_range

ENV_MAX_M = "REGDIV_MAX_M"
ENV_MAX_DEPTH = "REGDIV_MAX_DEPTH"
ENV_MAX_COUNT = "REGDIV_MAX_COUNT"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regdiv",
        description="Divisor-counting sequence tools: generation, verification, tree export.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help_: str, formats: tuple[str, ...]) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")
        p.add_argument("--cap-m", type=int, help="override the max-m cap")
        p.add_argument("--cap-depth", type=int, help="override the tree depth cap")
        p.add_argument("--cap-count", type=int, help="override the term count cap")
        return p

    p = add("seq", "emit s(1..count)", ("plain", "csv", "json", "bfile"))
    p.add_argument("--count", type=int, default=63)

    p = add("verify", "compare occurrence counts with tau(m*m+1)", ("plain", "csv", "json"))
    p.add_argument("--max-m", type=int, default=18)

    p = add("tree", "export the divisor-pair tree", ("json", "dot"))
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--pairs", action="store_true", help="full (d, m) pairs, not just values")

    p = add("occurrences", "indices n with s(n) = m, brute and constructed", ("plain", "json"))
    p.add_argument("--m", type=int, required=True)

    p = add("fib", "table of the Fibonacci path s(a(n)) = F(n)", ("plain", "csv"))
    p.add_argument("--max-n", type=int, default=20)

    p = add("primes", "n with n*n+1 prime, by the occurrence criterion", ("plain",))
    p.add_argument("--max-n", type=int, default=16)

    p = add("plot", "(n, s(n)) series as csv rows or an SVG line plot", ("csv", "svg"))
    p.add_argument("--count", type=int, default=63)

    return parser


def _resolve_cap(
    flag_value: int | None, env_name: str, default: int, parser: argparse.ArgumentParser
) -> int:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(env_name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        parser.error(f"{env_name} must be an integer, got {raw!r}")
    raise AssertionError("unreachable")


def _cmd_seq(args, parser, out: TextIO) -> int:
    if args.count < 1:
        parser.error("--count must be >= 1")
    cap = _resolve_cap(args.cap_count, ENV_MAX_COUNT, DEFAULT_MAX_COUNT, parser)
    values = s_range(args.count, max_count=cap)
    if args.format == "plain":
        out.write(" ".join(map(str, values)) + "\n")
    elif args.format == "csv":
        out.write("n,s\n")
        for n, v in enumerate(values, start=1):
            out.write(f"{n},{v}\n")
    elif args.format == "json":
        out.write(json.dumps(values) + "\n")
    else:  # bfile: "n value" lines, 1-based, no header
        for n, v in enumerate(values, start=1):
            out.write(f"{n} {v}\n")
    return 0


def _cmd_verify(args, parser, out: TextIO) -> int:
    if args.max_m < 0:
        parser.error("--max-m must be >= 0")
    cap = _resolve_cap(args.cap_m, ENV_MAX_M, analysis.DEFAULT_MAX_M, parser)
    report = analysis.verify_theorem(args.max_m, cap=cap)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    elif args.format == "csv":
        out.write("m,tau,count,pass\n")
        for r in report.records:
            out.write(f"{r.m},{r.tau_value},{r.count},{'true' if r.passed else 'false'}\n")
    else:
        for r in report.records:
            verdict = "ok" if r.passed else "MISMATCH"
            out.write(f"m={r.m} tau={r.tau_value} count={r.count} {verdict}\n")
        out.write(f"all pass: {'yes' if report.all_pass else 'no'}\n")
    return 0 if report.all_pass else 1


def _cmd_tree(args, parser, out: TextIO) -> int:
    if args.depth < 0:
        parser.error("--depth must be >= 0")
    cap = _resolve_cap(args.cap_depth, ENV_MAX_DEPTH, pairtree.DEFAULT_MAX_DEPTH, parser)
    values_only = not args.pairs
    if args.format == "dot":
        out.write(pairtree.tree_as_dot(args.depth, values_only=values_only, max_depth=cap))
    else:
        tree = pairtree.tree_as_dict(args.depth, values_only=values_only, max_depth=cap)
        out.write(json.dumps(tree, indent=2) + "\n")
    return 0


def _cmd_occurrences(args, parser, out: TextIO) -> int:
    if args.m < 0:
        parser.error("--m must be >= 0")
    cap = _resolve_cap(args.cap_m, ENV_MAX_M, analysis.DEFAULT_MAX_M, parser)
    brute = analysis.occurrences_brute(args.m, max_m=cap)
    constructed = analysis.indices_of(args.m)
    target = args.m * args.m + 1
    divs = divisors(target)
    prime = len(divs) == 2
    match = brute.passed and brute.indices == constructed.indices
    if args.format == "json":
        payload = {
            "m": args.m,
            "m2p1": target,
            "tau": brute.tau_value,
            "divisors": list(divs),
            "indices": list(brute.indices),
            "constructed": list(constructed.indices),
            "match": match,
            "prime": prime,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(f"m: {args.m}\n")
        out.write(f"m^2+1: {target}\n")
        out.write(f"tau: {brute.tau_value}\n")
        out.write("divisors: " + ",".join(map(str, divs)) + "\n")
        out.write("indices: " + ",".join(map(str, brute.indices)) + "\n")
        out.write("constructed: " + ",".join(map(str, constructed.indices)) + "\n")
        out.write(f"match: {'yes' if match else 'no'}\n")
        if prime:
            out.write(f"note: {target} is prime\n")
    return 0 if match else 1


def _cmd_fib(args, parser, out: TextIO) -> int:
    if args.max_n < 1:
        parser.error("--max-n must be >= 1")
    ev = SequenceEvaluator()
    rows = []
    a = 1
    f, g = 0, 1
    all_equal = True
    for n in range(1, args.max_n + 1):
        sa = ev[a]
        equal = sa == f
        all_equal = all_equal and equal
        rows.append((n, a, sa, f, equal))
        r = (n + 1) % 4
        if r == 0:
            a = 2 * a
        elif r == 1:
            a = a + 1
        elif r == 2:
            a = 2 * a + 1
        else:
            a = a - 1
        f, g = g, f + g
    if args.format == "csv":
        out.write("n,a,s_a,fib,equal\n")
        for n, an, sa, fn, eq in rows:
            out.write(f"{n},{an},{sa},{fn},{'true' if eq else 'false'}\n")
    else:
        out.write("n a(n) s(a(n)) F(n) equal\n")
        for n, an, sa, fn, eq in rows:
            out.write(f"{n} {an} {sa} {fn} {'yes' if eq else 'NO'}\n")
        out.write(f"all equal: {'yes' if all_equal else 'no'}\n")
    return 0 if all_equal else 1


def _cmd_primes(args, parser, out: TextIO) -> int:
    if args.max_n < 1:
        parser.error("--max-n must be >= 1")
    cap = _resolve_cap(args.cap_m, ENV_MAX_M, analysis.DEFAULT_MAX_M, parser)
    for n in range(1, args.max_n + 1):
        criterion = analysis.prime_criterion(n, max_m=cap)
        trial = is_prime(n * n + 1)
        if criterion != trial:
            print(
                f"regdiv: occurrence criterion and trial division disagree at n={n}",
                file=sys.stderr,
            )
            return 1
        if criterion:
            out.write(f"{n} {n * n + 1}\n")
    return 0


def _cmd_plot(args, parser, out: TextIO) -> int:
    if args.count < 1:
        parser.error("--count must be >= 1")
    cap = _resolve_cap(args.cap_count, ENV_MAX_COUNT, DEFAULT_MAX_COUNT, parser)
    values = s_range(args.count, max_count=cap)
    if args.format == "svg":
        out.write(svgplot.polyline_plot(values, title="s(n)"))
    else:
        for n, v in enumerate(values, start=1):
            out.write(f"{n},{v}\n")
    return 0


_HANDLERS = {
    "seq": _cmd_seq,
    "verify": _cmd_verify,
    "tree": _cmd_tree,
    "occurrences": _cmd_occurrences,
    "fib": _cmd_fib,
    "primes": _cmd_primes,
    "plot": _cmd_plot,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8") as out:
                return handler(args, parser, out)
        return handler(args, parser, sys.stdout)
    except ResourceLimitError as exc:
        print(f"regdiv: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"regdiv: consistency check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

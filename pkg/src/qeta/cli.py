"""Command-line front end.

Commands::

    qeta expand EXPR [--order N] [--mod M]     coefficient table of an expression
    qeta oracle KIND NMAX                      table of p / overp / a / g values
    qeta verify [--corpus PATH] [--only NAME] [--order N] [--nmax K]
                                               run a corpus, one record per entry
    qeta scan EXPR M --mod MOD [--nmax K]      divisibility verdict per residue j
    qeta dissect EXPR M J [--order N]          coefficients of extract(EXPR, M, J)

Output is plain TSV on stdout and is byte-deterministic for fixed inputs.
Exit codes: 0 everything passed, 1 at least one check failed, 2 usage or
parse/evaluation errors (diagnostics go to stderr).
"""

from __future__ import annotations

import argparse
import sys

from .corpus import DEFAULT_NMAX, DEFAULT_ORDER, default_corpus_text, load_corpus, parse_corpus, run_corpus
from .dsl import evaluate, parse
from .errors import QetaError
from .oracles import oracle_by_name
from .verify import check_congruence_progression

__all__ = ["main"]


def _print_table(values) -> None:
    out = sys.stdout
    for n, value in enumerate(values):
        out.write(f"{n}\t{value}\n")


def _cmd_expand(args) -> int:
    series = evaluate(parse(args.expr), args.order)
    if args.mod is not None:
        series = series.reduce_mod(args.mod)
    _print_table(series.coeffs)
    return 0


def _cmd_oracle(args) -> int:
    table = oracle_by_name(args.kind, args.nmax)
    _print_table(table.values)
    return 0


def _cmd_verify(args) -> int:
    if args.corpus is not None:
        entries = load_corpus(args.corpus)
    else:
        entries = parse_corpus(default_corpus_text())
    if args.only is not None and all(e.name != args.only for e in entries):
        raise QetaError(f'no corpus entry named "{args.only}"')
    reports = run_corpus(entries, only=args.only,
                         order_override=args.order, nmax_override=args.nmax)
    for report in reports:
        sys.stdout.write(report.record() + "\n")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_scan(args) -> int:
    if args.m < 1:
        raise QetaError("progression modulus m must be positive")
    base = parse(args.expr)
    failed = False
    for j in range(args.m):
        report = check_congruence_progression(
            base, args.m, j, args.mod, args.nmax, name=f"j={j}"
        )
        if report.passed:
            sys.stdout.write(f"{j}\tPASS\t\t\n")
        else:
            failed = True
            idx, residue, _ = report.first_mismatch
            sys.stdout.write(f"{j}\tFAIL\t{idx}\t{residue}\n")
    return 1 if failed else 0


def _cmd_dissect(args) -> int:
    series = evaluate(parse(f"extract(({args.expr}), {args.m}, {args.j})"), args.order)
    _print_table(series.coeffs)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qeta",
        description="Exact q-series arithmetic and eta-quotient identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="print the coefficient table of an expression")
    p_expand.add_argument("expr", help="eta-quotient expression, e.g. 'f3/(f1*f6)'")
    p_expand.add_argument("--order", type=int, default=DEFAULT_ORDER, metavar="N",
                          help=f"truncation order (default {DEFAULT_ORDER})")
    p_expand.add_argument("--mod", type=int, default=None, metavar="M",
                          help="reduce every coefficient mod M before printing")
    p_expand.set_defaults(func=_cmd_expand)

    p_oracle = sub.add_parser("oracle", help="print combinatorial oracle values")
    p_oracle.add_argument("kind", help="one of: p, overp, a, a-mod6, a-oddtwice, g")
    p_oracle.add_argument("nmax", type=int, help="highest n to compute")
    p_oracle.set_defaults(func=_cmd_oracle)

    p_verify = sub.add_parser("verify", help="run a corpus of identity checks")
    p_verify.add_argument("--corpus", metavar="PATH", default=None,
                          help="corpus file (default: the shipped corpus)")
    p_verify.add_argument("--only", metavar="NAME", default=None,
                          help="run only the entry with this exact name")
    p_verify.add_argument("--order", type=int, default=None, metavar="N",
                          help="override the order of every entry")
    p_verify.add_argument("--nmax", type=int, default=None, metavar="K",
                          help="override the nmax bound of every entry")
    p_verify.set_defaults(func=_cmd_verify)

    p_scan = sub.add_parser("scan", help="scan all residues j mod m for divisibility")
    p_scan.add_argument("expr", help="base expression whose coefficients are scanned")
    p_scan.add_argument("m", type=int, help="progression modulus m")
    p_scan.add_argument("--mod", type=int, required=True, metavar="MOD",
                        help="divisibility modulus to test")
    p_scan.add_argument("--nmax", type=int, default=DEFAULT_NMAX, metavar="K",
                        help=f"check indices up to this bound (default {DEFAULT_NMAX})")
    p_scan.set_defaults(func=_cmd_scan)

    p_dissect = sub.add_parser("dissect", help="print coefficients of extract(expr, m, j)")
    p_dissect.add_argument("expr")
    p_dissect.add_argument("m", type=int)
    p_dissect.add_argument("j", type=int)
    p_dissect.add_argument("--order", type=int, default=DEFAULT_ORDER, metavar="N",
                           help=f"order of the extracted series (default {DEFAULT_ORDER})")
    p_dissect.set_defaults(func=_cmd_dissect)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QetaError as exc:
        print(f"qeta: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

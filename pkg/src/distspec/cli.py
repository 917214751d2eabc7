"""Command-line entry point: ``distspec {analyze,scan,family,shadow,verify}``.

Machine output goes to stdout, diagnostics to stderr. Exit codes: 0 ok,
1 usage error, 2 verification failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from contextlib import contextmanager
from dataclasses import asdict

from distspec import families
from distspec.bounds import minimizer_claims_report, sigma_n, sigma_record
from distspec.corpus import format_value, aggregate, enumerate_connected, scan, write_report
from distspec.graph_core import (
    Graph6Error,
    NotConnectedError,
    UnsupportedSizeError,
    distance_matrix,
    encode_graph6,
    is_isomorphic,
    parse_graph6,
)
from distspec.hypergraph import is_hypergraph_isomorphic, paper_fixtures, read_hypergraph, shadow
from distspec.spectral import DEFAULT_TOL, perron

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3
TOL_ENV = "DISTSPEC_TOL"

log = logging.getLogger("distspec")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _tol(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid tolerance {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="distspec", description=__doc__.splitlines()[0])
    parser.add_argument("--tol", type=_tol, default=None,
                        help=f"Perron enclosure width (default {DEFAULT_TOL:g}, or ${TOL_ENV})")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="print the sigma record of one graph6 string")
    p.add_argument("graph6")
    p.add_argument("--claims", action="store_true", help="include the minimizer claims report")

    p = sub.add_parser("scan", help="scan a graph6 corpus or a built-in enumeration")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="F", help="graph6 file, '-' for stdin")
    src.add_argument("--enum", metavar="N", type=int, help="all connected graphs on N <= 7 vertices")
    p.add_argument("--output", metavar="PATH", default="-")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("family", help="extremal family members with closed-form values")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--odd", metavar="N", type=int)
    which.add_argument("--dvdr-even", metavar="N", type=int)

    p = sub.add_parser("shadow", help="shadow graphs of uniform hypergraphs")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--fixtures", action="store_true")
    which.add_argument("--input", metavar="F", nargs="+")

    p = sub.add_parser("verify", help="exhaustive lower-bound sweep for 4 <= n <= K")
    p.add_argument("--max-n", type=int, default=7)
    return parser


@contextmanager
def _open(path: str, mode: str):
    if path == "-":
        yield sys.stdin if "r" in mode else sys.stdout
    else:
        with open(path, mode, newline="" if "w" in mode else None) as fh:
            yield fh


def _emit(obj) -> None:
    sys.stdout.write(format_value(obj) + "\n")


def _cmd_analyze(args, tol) -> int:
    g = parse_graph6(args.graph6)
    out = sigma_record(g, tol).as_dict()
    if args.claims:
        out["claims"] = asdict(minimizer_claims_report(g, tol))
    _emit(out)
    return EXIT_OK


def _cmd_scan(args, tol) -> int:
    if args.enum is not None:
        items = enumerate_connected(args.enum)
        records = list(scan(items, tol, args.workers))
    else:
        with _open(args.input, "r") as fh:
            records = list(scan(fh, tol, args.workers))
    summary = aggregate(records, tol)
    for issue in summary.issues:
        print(f"distspec: {issue.kind}: {issue.message}", file=sys.stderr)
    with _open(args.output, "w") as sink:
        write_report(summary, records, args.format, sink)
    return EXIT_OK


def _cmd_family(args, tol) -> int:
    if args.odd is not None:
        n, family = args.odd, families.ODD_MULTIPARTITE
        graphs = [families.complete_odd_multipartite(n)]
    else:
        n, family = args.dvdr_even, families.DVDR_EVEN
        graphs = families.enumerate_n_minus_4_dvdr(n)
    lam = families.closed_form_lambda1(n, family)
    for g in graphs:
        cert = perron(distance_matrix(g), tol)
        _emit({
            "graph6": encode_graph6(g),
            "n": n,
            "family": family,
            "lambda1_closed_form": lam,
            "sigma_closed_form": sigma_n(n),
            "lambda_lo": cert.lambda_lo,
            "lambda_hi": cert.lambda_hi,
        })
    return EXIT_OK


def _cmd_shadow(args, tol) -> int:
    if args.fixtures:
        hs = list(zip(("H1", "H2"), paper_fixtures()))
    else:
        hs = []
        for path in args.input:
            with _open(path, "r") as fh:
                hs.append((path, read_hypergraph(fh)))
    for name, h in hs:
        _emit({"name": name, "n": h.n, "r": h.r, "edges": len(h.edges), "shadow_graph6": encode_graph6(shadow(h))})
    for i in range(len(hs)):
        for j in range(i + 1, len(hs)):
            (na, a), (nb, b) = hs[i], hs[j]
            _emit({
                "pair": [na, nb],
                "shadow_isomorphic": is_isomorphic(shadow(a), shadow(b)),
                "hypergraph_isomorphic": is_hypergraph_isomorphic(a, b),
            })
    return EXIT_OK


def _cmd_verify(args, tol) -> int:
    from distspec.verification import run_checks

    if not 4 <= args.max_n <= 7:
        raise UsageError("--max-n must lie in 4..7")
    checks = run_checks(args.max_n, tol)
    for check in checks:
        sys.stdout.write(check.line() + "\n")
    failed = sum(not c.passed for c in checks)
    sys.stdout.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return EXIT_VERIFY if failed else EXIT_OK


COMMANDS = {
    "analyze": _cmd_analyze,
    "scan": _cmd_scan,
    "family": _cmd_family,
    "shadow": _cmd_shadow,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        tol = args.tol
        if tol is None:
            env = os.environ.get(TOL_ENV)
            tol = _tol(env) if env else DEFAULT_TOL
    except (UsageError, argparse.ArgumentTypeError) as exc:
        print(f"distspec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return COMMANDS[args.command](args, tol)
    except (UsageError, Graph6Error, NotConnectedError, UnsupportedSizeError, ValueError) as exc:
        print(f"distspec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"distspec: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line front end: ``iscwiener {compute,family,cuts,verify,export,bench}``.

Exit codes: 0 success, 1 invalid parameters or usage, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .cuts import cuts_to_csv, geometric_cuts, table_cuts
from .errors import InexactDivision, ISCError
from .lattice import build_isc
from .params import Bitrapezium, Hexagonal, Trapezium, classify_case, validate_params
from .report import (
    METHODS,
    check_tuple,
    compute_report,
    family_report,
    reports_to_csv,
    sweep_params,
    timed,
    wiener_by_method,
)

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _add_tuple_args(p: argparse.ArgumentParser) -> None:
    for name in ("p", "q", "m", "n"):
        p.add_argument(f"--{name}", type=int, required=True)


def _add_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="iscwiener", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="Wiener index and average distance of ISC(p,q,m,n)")
    _add_tuple_args(c)
    c.add_argument("--method", choices=METHODS + ("all",), default="all")
    c.add_argument("--format", choices=("json", "csv", "text"), default="text")
    c.add_argument("--digits", type=int, default=12, help="significant digits of mu_decimal")
    _add_out(c)

    f = sub.add_parser("family", help="H(p), T(n,p) or BT(n,p,q) via their own closed forms")
    g = f.add_mutually_exclusive_group(required=True)
    g.add_argument("--hex", type=int, metavar="P")
    g.add_argument("--trap", type=int, nargs=2, metavar=("N", "P"))
    g.add_argument("--bitrap", type=int, nargs=3, metavar=("N", "P", "Q"))
    f.add_argument("--bfs", action="store_true", help="also run the BFS oracle")
    f.add_argument("--format", choices=("json", "csv", "text"), default="text")
    f.add_argument("--digits", type=int, default=12)
    _add_out(f)

    k = sub.add_parser("cuts", help="dump cut records as CSV")
    _add_tuple_args(k)
    k.add_argument("--source", choices=("geometric", "tables"), default="geometric")
    _add_out(k)

    v = sub.add_parser("verify", help="compare all methods over a parameter sweep")
    v.add_argument("--max-n", type=int, default=14)
    v.add_argument("--max-m", type=int, default=6)
    v.add_argument("--jobs", type=int, default=1)
    _add_out(v)

    e = sub.add_parser("export", help="write the constructed graph")
    _add_tuple_args(e)
    e.add_argument("--format", choices=("adjlist", "dot"), default="adjlist")
    _add_out(e)

    b = sub.add_parser("bench", help="per-method timings")
    _add_tuple_args(b)
    b.add_argument("--repeat", type=int, default=5)
    b.add_argument("--method", choices=METHODS + ("all",), default="all")
    b.add_argument("--format", choices=("json", "text"), default="text")
    _add_out(b)
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args):
    return validate_params(args.p, args.q, args.m, args.n)


def _render(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        return reports_to_csv([report])
    return report.to_text()


def cmd_compute(args) -> int:
    params = _params(args)
    methods = METHODS if args.method == "all" else (args.method,)
    report = compute_report(params, methods, args.digits)
    _emit(_render(report, args.format), args.out)
    if not report.agree:
        print(f"methods disagree for {params}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_family(args) -> int:
    if args.hex is not None:
        family = Hexagonal(args.hex)
    elif args.trap is not None:
        family = Trapezium(*args.trap)
    else:
        family = Bitrapezium(*args.bitrap)
    report = family_report(family, args.digits, with_bfs=args.bfs)
    _emit(_render(report, args.format), args.out)
    if not report.agree:
        print(f"family formula and general closed form disagree for {family}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_cuts(args) -> int:
    params = _params(args)
    if args.source == "tables":
        cuts = table_cuts(params)
    else:
        cuts = geometric_cuts(build_isc(params), params)
    _emit(cuts_to_csv(cuts), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    todo = list(sweep_params(args.max_n, args.max_m))
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(check_tuple, todo, chunksize=8))
    else:
        results = [check_tuple(p) for p in todo]
    cases = Counter(str(classify_case(r.params)) for r in results)
    failed = [r for r in results if not r.ok]
    lines = []
    for r in failed:
        lines.append(f"MISMATCH {r.params}")
        lines.extend(f"  {msg}" for msg in r.problems)
    summary = ", ".join(f"{k}: {v}" for k, v in sorted(cases.items()))
    lines.append(
        f"checked {len(results)} tuples (n <= {args.max_n}, m <= {args.max_m}; {summary}); "
        f"{len(failed)} mismatches"
    )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_export(args) -> int:
    graph = build_isc(_params(args))
    text = graph.to_dot() if args.format == "dot" else graph.to_adjlist()
    _emit(text, args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    params = _params(args)
    methods = METHODS if args.method == "all" else (args.method,)
    rows = {}
    for method in methods:
        times = []
        value = None
        for _ in range(max(1, args.repeat)):
            # rebuild each time so graph construction is part of the measured cost
            value, dt = timed(lambda: wiener_by_method(method, params, None))
            times.append(dt)
        rows[method] = {"W": str(value), "min": min(times),
                        "mean": statistics.fmean(times), "repeat": len(times)}
    if args.format == "json":
        text = json.dumps({"params": list(params.as_tuple()), "methods": rows}, indent=2) + "\n"
    else:
        lines = [f"{params}  repeat={args.repeat}"]
        lines += [f"  {k:<8} min {v['min'] * 1e3:10.3f} ms  mean {v['mean'] * 1e3:10.3f} ms  W={v['W']}"
                  for k, v in rows.items()]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_MISMATCH if len({v["W"] for v in rows.values()}) > 1 else EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "family": cmd_family,
    "cuts": cmd_cuts,
    "verify": cmd_verify,
    "export": cmd_export,
    "bench": cmd_bench,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    except InexactDivision as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ISCError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command line front end: run verification suites, print single objects."""

import argparse
import sys

from .qbinom import qbin
from .qcore import format_qpoly, format_qseries
from .qtrinom import t_n, trinomial
from .report import emit_report
from .suites import SUITES, SuiteOptions, UsageError, run_suite
from .virasoro import bosonic, character, fermionic

SHOW_OBJECTS = {
    "qbin": (2, lambda n, a: format_qpoly(qbin(n, a))),
    "trinomial": (3, lambda L, b, a: format_qpoly(trinomial(L, b, a))),
    "tn": (3, lambda n, L, a: format_qpoly(t_n(n, L, a))),
    "fermionic": (3, lambda p, pp, L: format_qpoly(fermionic(p, pp, L))),
    "bosonic": (3, lambda p, pp, L: format_qpoly(bosonic(p, pp, L))),
    "character": (
        5,
        lambda p, pp, r, s, order: format_qseries(
            character(p, pp, r, s, 4 * order)
        ),
    ),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtrin",
        description="Exact verification of q-binomial and q-trinomial identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--lmax", type=int, default=None, metavar="N")
    verify.add_argument(
        "--order", type=int, default=None, metavar="N", help="series order in powers of q"
    )
    verify.add_argument("--p", type=int, default=None, metavar="P")
    verify.add_argument("--pp", type=int, default=None, metavar="PP")
    verify.add_argument("--n", type=int, default=None, metavar="N")
    verify.add_argument("--threads", type=int, default=1, metavar="K")
    verify.add_argument("--seed", type=int, default=0, metavar="S")
    verify.add_argument(
        "--json", dest="json_path", default=None, metavar="PATH",
        help="also write the report as JSON",
    )

    show = sub.add_parser("show", help="print one object")
    show.add_argument("object", choices=sorted(SHOW_OBJECTS))
    show.add_argument("params", type=int, nargs="+")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            options = SuiteOptions(
                lmax=args.lmax,
                order=args.order,
                p=args.p,
                pp=args.pp,
                n=args.n,
                threads=args.threads,
                seed=args.seed,
            )
            report = run_suite(args.suite, options)
            emit_report(report, "text")
            if args.json_path is not None:
                emit_report(report, "json", args.json_path)
            return 0 if report.all_passed() else 1
        arity, render = SHOW_OBJECTS[args.object]
        if len(args.params) != arity:
            raise UsageError(
                f"{args.object} takes {arity} integers, got {len(args.params)}"
            )
        print(render(*args.params))
        return 0
    except UsageError as exc:
        print(f"qtrin: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"qtrin: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

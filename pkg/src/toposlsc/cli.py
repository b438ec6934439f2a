"""Command-line surface.

Subcommands: `lsc` (classifier of a category file), `group` (subgroup lattice
and normalization arrows), `words` (regex / DFA workbench), `verify` (the
invariant suites).  Exit codes: 0 all good, 1 a verification check failed,
2 malformed input, 3 budget exceeded.
"""

import argparse
import os
import sys

from .errors import BudgetExceeded, InputFormatError, ToposError
from .fincat import DEFAULT_BUDGET
from . import io, reports
from .lsc import build_lsc
from .verify import run_suite
from .words import regex_to_min_dfa

BUDGET_ENV = "TOPOS_LSC_BUDGET"


def _build_parser():
    # the global flags are accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help=f"enumeration size cap (default: ${BUDGET_ENV} "
                             f"or {DEFAULT_BUDGET})")
    common.add_argument("--format", choices=("human", "machine"),
                        default=argparse.SUPPRESS,
                        help="report rendering (default: human)")
    parser = argparse.ArgumentParser(
        prog="topos-lsc",
        parents=[common],
        description=("Local state classifiers of finite presheaf topoi, "
                     "normalization operators, and the word-congruence workbench."))
    sub = parser.add_subparsers(dest="command")

    p_lsc = sub.add_parser("lsc", parents=[common],
                           help="classifier of a finite site")
    p_lsc.add_argument("category_file")

    p_group = sub.add_parser("group", parents=[common],
                             help="subgroup lattice and normalization arrows")
    p_group.add_argument("group_file")

    p_words = sub.add_parser("words", parents=[common],
                             help="regular-language workbench")
    src = p_words.add_mutually_exclusive_group(required=True)
    src.add_argument("--regex", help="regular expression source")
    src.add_argument("--dfa", help="DFA file")
    p_words.add_argument("--alphabet", help="alphabet symbols, e.g. 'ab'")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run the invariant suites")
    p_verify.add_argument("--suite", default="all",
                          choices=("all", "lsc", "normalize", "filters", "words"))
    p_verify.add_argument("--fixtures", default=None,
                          help="directory of extra fixture files")
    return parser


def _format(args):
    return getattr(args, "format", "human")


def _budget(args):
    given = getattr(args, "budget", None)
    if given is not None:
        return given
    env = os.environ.get(BUDGET_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputFormatError(f"{BUDGET_ENV}={env!r} is not an integer") from None
    return DEFAULT_BUDGET


def _cmd_lsc(args, out):
    cat = io.load_category(args.category_file)
    L = build_lsc(cat, _budget(args))
    report = reports.lsc_report(L)
    out.write(reports.render(report, _format(args)))
    return 0 if all(v["pass"] for v in report["verdicts"]) else 1


def _cmd_group(args, out):
    G = io.load_group(args.group_file)
    L = build_lsc(G.site(), _budget(args))
    report = reports.group_report(G, L)
    out.write(reports.render(report, _format(args)))
    return 0 if all(v["pass"] for v in report["verdicts"]) else 1


def _cmd_words(args, out):
    if args.regex is not None:
        if not args.alphabet:
            raise InputFormatError("--regex requires --alphabet")
        d = regex_to_min_dfa(args.regex, args.alphabet)
        source = {"regex": args.regex, "alphabet": args.alphabet}
    else:
        d = io.load_dfa(args.dfa)
        if args.alphabet and tuple(args.alphabet) != d.alphabet:
            raise InputFormatError(
                f"--alphabet {args.alphabet!r} does not match the DFA file's "
                f"alphabet {''.join(d.alphabet)!r}")
        source = {"dfa": args.dfa}
    report = reports.words_report(d, source=source)
    out.write(reports.render(report, _format(args)))
    return 0 if all(v["pass"] for v in report["verdicts"]) else 1


def _cmd_verify(args, out):
    cert = run_suite(args.suite, _budget(args), args.fixtures)
    report = reports.make_report(f"verify-{args.suite}", {"checks": len(cert.checks)},
                                 [cert])
    out.write(reports.render(report, _format(args)))
    return 0 if cert.ok else 1


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2
    handlers = {"lsc": _cmd_lsc, "group": _cmd_group,
                "words": _cmd_words, "verify": _cmd_verify}
    try:
        return handlers[args.command](args, sys.stdout)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except InputFormatError as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        for detail in exc.details:
            print(f"  - {detail}", file=sys.stderr)
        return 2
    except ToposError as exc:
        print(f"invalid input: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

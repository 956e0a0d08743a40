"""Command-line front end.

Exit status: 0 on success (word free, all checks pass), 1 when a violation or
failed check is found, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import automaton, power, verify
from .words import CAP_ENV, ResourceLimitError, WordError, format_spaced, generate, parse_word

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, flag, message):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _threshold(text):
    try:
        return power.parse_threshold(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powerfree",
        description="Kurosaki's ternary word: generation, random access, "
                    "repetition analysis and verification.")
    parser.add_argument("--cap", type=_nonneg_int, metavar="N",
                        help=f"largest generation level (default ${CAP_ENV} or 12)")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("generate", help="print phi^N(2)")
    p.add_argument("--level", type=_nonneg_int, required=True, metavar="N")
    p.add_argument("--spaced", action="store_true", help="group symbols into triples")
    fmt(p)

    p = sub.add_parser("at", help="symbol of the bi-infinite word at a centered index")
    p.add_argument("--index", type=int, required=True, metavar="I")
    fmt(p)

    p = sub.add_parser("exponent", help="exponent and least period of a word")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--word", metavar="W")
    src.add_argument("--stdin", action="store_true", help="read the word from standard input")
    p.add_argument("--threshold", type=_threshold, metavar="P/Q",
                   help="also list maximal repetitions breaking this threshold")
    p.add_argument("--mode", choices=("strict", "plus"), default="plus")
    fmt(p)

    p = sub.add_parser("verify", help="run the structural checks")
    p.add_argument("--level-max", type=int, default=8, metavar="N")
    p.add_argument("--checks", metavar="NAMES",
                   help="comma-separated subset of: " + ",".join(verify.CHECK_NAMES))
    fmt(p)

    p = sub.add_parser("search", help="backtracking search for power-free words")
    p.add_argument("--alphabet", type=int, required=True, metavar="K")
    p.add_argument("--threshold", type=_threshold, required=True, metavar="P/Q")
    p.add_argument("--mode", choices=("strict", "plus"), required=True)
    p.add_argument("--max-len", type=int, required=True, metavar="L")
    fmt(p)
    return parser


def _fraction(x):
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def cmd_generate(args, out):
    try:
        word = generate(args.level)
    except ResourceLimitError as exc:
        raise UsageError("--level", str(exc)) from None
    if args.format == "json":
        out.write(verify.dump_json({"level": args.level, "length": len(word), "word": word}))
    else:
        out.write((format_spaced(word) if args.spaced else word) + "\n")
    return EXIT_OK


def cmd_at(args, out):
    symbol = automaton.symbol_at_infinite(args.index)
    if args.format == "json":
        digits = automaton.render_digits(automaton.to_balanced_ternary(args.index))
        out.write(verify.dump_json({"index": args.index, "digits": digits, "symbol": symbol}))
    else:
        out.write(f"{symbol}\n")
    return EXIT_OK


def cmd_exponent(args, out, stdin):
    flag = "--stdin" if args.stdin else "--word"
    raw = stdin.read().strip() if args.stdin else args.word
    try:
        word = parse_word(raw)
        period = power.least_period(word)
    except WordError as exc:
        raise UsageError(flag, str(exc)) from None
    x = power.exponent(word)
    violations = None
    if args.threshold is not None:
        violations = power.find_violations(word, args.threshold, args.mode)
    if args.format == "json":
        payload = {"word": word, "length": len(word), "period": period, "exponent": _fraction(x)}
        if violations is not None:
            payload["threshold"] = _fraction(args.threshold)
            payload["mode"] = args.mode
            payload["violations"] = [v.to_dict() for v in violations]
        out.write(verify.dump_json(payload))
    else:
        out.write(f"{_fraction(x)} (period {period})\n")
        for v in violations or ():
            out.write(v.to_line() + "\n")
    return EXIT_FOUND if violations else EXIT_OK


def cmd_verify(args, out):
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = sorted(set(checks) - set(verify.CHECK_NAMES))
        if unknown:
            raise UsageError("--checks", f"unknown check(s) {', '.join(unknown)}")
    if args.level_max < 1:
        raise UsageError("--level-max", f"must be >= 1, got {args.level_max}")
    try:
        reports = verify.run_all(args.level_max, checks)
    except ResourceLimitError as exc:
        raise UsageError("--level-max", str(exc)) from None
    out.write(verify.render_json(reports) if args.format == "json" else verify.render_table(reports))
    return EXIT_OK if verify.all_passed(reports) else EXIT_FOUND


def cmd_search(args, out):
    if args.alphabet not in (2, 3):
        raise UsageError("--alphabet", f"must be 2 or 3, got {args.alphabet}")
    if args.max_len < 1:
        raise UsageError("--max-len", f"must be >= 1, got {args.max_len}")
    summary = power.avoidance_search(args.alphabet, args.threshold, args.mode, args.max_len)
    if args.format == "json":
        out.write(verify.dump_json(summary.to_dict()))
    else:
        out.write(
            f"alphabet {summary.alphabet_size}, threshold {_fraction(summary.threshold)}, "
            f"mode {summary.mode.value}, max-len {summary.max_len}\n"
            f"terminated: {'yes' if summary.terminated else 'no'}\n"
            f"longest: {summary.longest_length} {summary.longest}\n"
            f"nodes: {summary.nodes}\n"
            f"counts: {' '.join(map(str, summary.counts))}\n")
    return EXIT_OK


def main(argv=None, out=None, stdin=None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    saved = os.environ.get(CAP_ENV)
    if args.cap is not None:
        os.environ[CAP_ENV] = str(args.cap)
    try:
        if args.command == "generate":
            return cmd_generate(args, out)
        if args.command == "at":
            return cmd_at(args, out)
        if args.command == "exponent":
            return cmd_exponent(args, out, stdin)
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_search(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"powerfree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"powerfree: error: {CAP_ENV}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.cap is not None:
            if saved is None:
                os.environ.pop(CAP_ENV, None)
            else:
                os.environ[CAP_ENV] = saved


if __name__ == "__main__":
    sys.exit(main())

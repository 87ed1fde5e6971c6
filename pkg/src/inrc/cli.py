"""Command-line interface.

Exit status: 0 on success, 1 when a check or verification fails, 2 on usage
errors. Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import factors, repetitions
from .debruijn import de_bruijn, extend_de_bruijn
from .oracles import ORACLES, verify
from .wordspec import WordSpecError, parse_word_spec
from .words import GenerationBudgetExceeded, render


class UsageError(Exception):
    pass


def _spec(text):
    try:
        return parse_word_spec(text)
    except WordSpecError as exc:
        raise UsageError(f"bad --word: {exc}") from None


def _prefix(stream, length):
    try:
        return stream.prefix(length)
    except GenerationBudgetExceeded as exc:
        raise UsageError(f"{exc}; at most {exc.safe_length} letters are available") from None


def _n_range(args):
    if args.n_min < 1 or args.n_max < args.n_min:
        raise UsageError("need 1 <= --n-min <= --n-max")
    return range(args.n_min, args.n_max + 1)


def _write_records(records, fields, fmt, out):
    if fmt == "json":
        json.dump([{k: r[k] for k in fields} for r in records], out, indent=1)
        out.write("\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(fields)
        for r in records:
            w.writerow([r[k] for k in fields])


def cmd_generate(args, out):
    stream = _spec(args.word).stream()
    if args.length < 0:
        raise UsageError("--length must be non-negative")
    text = render(_prefix(stream, args.length), stream.symbols) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        out.write(text)
    return 0


def cmd_complexity(args, out):
    stream = _spec(args.word).stream()
    ns = _n_range(args)
    if args.fn == "inrc":
        profile = factors.inrc_profile(stream, ns, args.cap)
    else:
        length = args.prefix if args.prefix is not None else max(10_000, 4 * args.n_max)
        if length < args.n_max:
            raise UsageError(f"--prefix {length} is shorter than --n-max {args.n_max}")
        p = _prefix(stream, length)
        make = factors.nrc_profile if args.fn == "nrc" else factors.factor_profile
        profile = make(p, ns, stream.label)
    records = [{"n": r.n, "value": r.value, "status": r.status} for r in profile.rows]
    _write_records(records, ("n", "value", "status"), args.format, out)
    return 0


def _avoid_pattern(text):
    if text == "square":
        return repetitions.SQUARE
    if text == "cube":
        return repetitions.CUBE
    if text == "overlap":
        return "overlap"
    if text.startswith("power:"):
        try:
            num, den = text[len("power:"):].split("/")
            alpha = Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad exponent in {text!r}; expected power:<p>/<q>") from None
        if alpha <= 1:
            raise UsageError("exponent must exceed 1")
        return alpha
    raise UsageError(f"unknown --avoid {text!r}")


def cmd_check(args, out):
    stream = _spec(args.word).stream()
    pattern = _avoid_pattern(args.avoid)
    p = _prefix(stream, args.length)
    if pattern == "overlap":
        hit = repetitions.find_overlap(p)
        detail = hit and f"position={hit.position} length={hit.length} period={hit.period}"
    else:
        hit = repetitions.find_power(p, pattern)
        detail = hit and (f"position={hit.position} length={hit.length} period={hit.period} "
                          f"exponent={hit.exponent}")
    if hit is None:
        out.write(f"pass {stream.label} length={args.length} avoids {args.avoid}\n")
        return 0
    out.write(f"fail {stream.label} {detail}\n")
    return 1


def cmd_debruijn(args, out):
    if args.q < 2 or args.order < 1:
        raise UsageError("need --q >= 2 and --order >= 1")
    if args.extend_to is not None:
        if args.cyclic:
            raise UsageError("--extend-to works on linear sequences; drop --cyclic")
        b = extend_de_bruijn(de_bruijn(args.q, args.order, cyclic=False), args.extend_to)
    else:
        b = de_bruijn(args.q, args.order, cyclic=args.cyclic)
    out.write(render(b.letters) + "\n")
    return 0


def cmd_verify(args, out):
    stream = _spec(args.word).stream()
    report = verify(stream, ORACLES[args.oracle], _n_range(args), args.cap)
    records = [
        {"n": r.n, "predicted": r.predicted, "value": r.computed, "status": r.status, "result": r.outcome}
        for r in report.rows
    ]
    _write_records(records, ("n", "predicted", "value", "status", "result"), args.format, out)
    counts = ", ".join(f"{k}={v}" for k, v in report.summary().items())
    print(f"{stream.label} vs {args.oracle}: {counts}", file=sys.stderr)
    return 0 if report.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="inrc", description="Initial non-repetitive complexity of morphic and constructed infinite words"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="print a prefix of a word")
    g.add_argument("--word", required=True)
    g.add_argument("--length", type=int, required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("complexity", help="inrc, nrc or factor complexity for a range of n")
    c.add_argument("--word", required=True)
    c.add_argument("--fn", choices=("inrc", "nrc", "factor"), default="inrc")
    c.add_argument("--n-min", type=int, required=True)
    c.add_argument("--n-max", type=int, required=True)
    c.add_argument("--cap", type=int, default=factors.DEFAULT_CAP, help="positions scanned by inrc")
    c.add_argument("--prefix", type=int, help="prefix length for nrc/factor (ignored by inrc)")
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.set_defaults(func=cmd_complexity)

    k = sub.add_parser("check", help="test a prefix for a forbidden repetition")
    k.add_argument("--word", required=True)
    k.add_argument("--length", type=int, required=True)
    k.add_argument("--avoid", required=True, help="square, cube, overlap or power:<p>/<q>")
    k.set_defaults(func=cmd_check)

    d = sub.add_parser("debruijn", help="lexicographically least de Bruijn sequence")
    d.add_argument("--q", type=int, required=True)
    d.add_argument("--order", type=int, required=True)
    d.add_argument("--cyclic", action="store_true")
    d.add_argument("--extend-to", type=int)
    d.set_defaults(func=cmd_debruijn)

    v = sub.add_parser("verify", help="compare inrc with a closed form or bound")
    v.add_argument("--word", required=True)
    v.add_argument("--oracle", choices=tuple(ORACLES), required=True)
    v.add_argument("--n-min", type=int, required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--cap", type=int, default=factors.DEFAULT_CAP)
    v.add_argument("--format", choices=("csv", "json"), default="csv")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"inrc {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 verification failure or counterexample, 2 usage or
input error. Every error is a single stderr line starting with ``error:``.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from . import words as ch
from .extremal import BUILDERS, NotExtremalError, phi, varphi
from .filling import Filling, content, descents, inv, maj, quinv
from .macdonald import ConjectureCounterexample, conjecture_match, macdonald_poly, stat_profile
from .reading import ORDERS, charge_word, cocharge_word
from .shape import Partition, conjugate, n_stat, partitions_up_to
from .verify import SUITES

DEFAULT_CEILINGS = {"size": 7, "alphabet": 4, "length": 10}
HARD_CAPS = {"size": 10, "alphabet": 6, "length": 12}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_shape(text: str) -> Partition:
    try:
        return Partition(int(p) for p in text.replace(" ", "").split(",") if p)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}: {exc}") from None


def _read_json(path: str):
    name = "<stdin>" if path == "-" else path
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(f"{name}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{name}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _read_filling(path: str) -> Filling:
    try:
        return Filling.from_json(_read_json(path))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"invalid filling: {exc}") from None


def _fmt_cell(u) -> str:
    return f"({u.row},{u.col})"


def _check_bounds(args, sizes=(), alphabet=None, length=None):
    ceil = {
        "size": args.ceiling_size,
        "alphabet": args.ceiling_alphabet,
        "length": args.ceiling_length,
    }
    for key, value in ceil.items():
        if value > HARD_CAPS[key]:
            raise UsageError(f"--ceiling-{key} {value} exceeds the hard cap {HARD_CAPS[key]}")
    n = alphabet or 1
    biggest = max(sizes, default=0)
    if biggest > ceil["size"]:
        raise UsageError(
            f"diagram size {biggest} exceeds ceiling {ceil['size']} "
            f"(about {n ** biggest} fillings per shape); raise --ceiling-size to at most {HARD_CAPS['size']}"
        )
    if alphabet is not None and alphabet > ceil["alphabet"]:
        raise UsageError(
            f"alphabet {alphabet} exceeds ceiling {ceil['alphabet']} "
            f"(about {alphabet ** biggest} fillings per shape); raise --ceiling-alphabet to at most {HARD_CAPS['alphabet']}"
        )
    if alphabet is not None and alphabet < 1:
        raise UsageError("alphabet must be at least 1")
    if length is not None and length > ceil["length"]:
        raise UsageError(
            f"word length {length} exceeds ceiling {ceil['length']}; raise --ceiling-length to at most {HARD_CAPS['length']}"
        )


def cmd_stats(args, out):
    sigma = _read_filling(args.file)
    cw = cocharge_word(sigma, args.order)
    w = charge_word(sigma, args.order)
    des = sorted(descents(sigma))
    print("shape " + " ".join(map(str, sigma.shape)), file=out)
    print("content " + " ".join(map(str, content(sigma))), file=out)
    print("des " + (" ".join(map(_fmt_cell, des)) if des else "none"), file=out)
    print(f"maj {maj(sigma)}", file=out)
    print(f"inv {inv(sigma)}", file=out)
    print(f"quinv {quinv(sigma)}", file=out)
    print(f"cw {ch.word_str(cw)}", file=out)
    print(f"w {ch.word_str(w)}", file=out)
    print(f"charge {ch.charge(w)}", file=out)
    print(f"cocharge {ch.cocharge(cw)}", file=out)
    return 0


_IDENTITY = {
    "inv-max": ("charge", "standard"),
    "quinv-max": ("charge", "primed"),
    "inv-zero": ("cocharge", "standard"),
    "quinv-zero": ("cocharge", "primed"),
}


def _identity_value(sigma: Filling, kind: str) -> tuple[str, int]:
    stat, order = _IDENTITY[kind]
    if stat == "charge":
        return stat, ch.charge(charge_word(sigma, order))
    return stat, ch.cocharge(cocharge_word(sigma, order))


def _emit_filling(sigma: Filling, kind: str, out):
    print(json.dumps(sigma.to_json()), file=out)
    print(f"maj {maj(sigma)}", file=out)
    stat, value = _identity_value(sigma, kind)
    print(f"{stat} {value}", file=out)


def cmd_build(args, out):
    family = _read_json(args.file)
    if not isinstance(family, list) or not all(isinstance(r, list) for r in family):
        raise UsageError("rows file must be a JSON array of arrays")
    shape = args.shape if args.shape is not None else Partition(len(r) for r in family)
    try:
        sigma = BUILDERS[args.kind](shape, family)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    _emit_filling(sigma, args.kind, out)
    return 0


def cmd_map(args, out):
    sigma = _read_filling(args.file)
    fn, kind = (phi, "quinv-max") if args.bijection == "phi" else (varphi, "quinv-zero")
    try:
        tau = fn(sigma)
    except NotExtremalError as exc:
        raise UsageError(str(exc)) from None
    _emit_filling(tau, kind, out)
    return 0


def cmd_poly(args, out):
    _check_bounds(args, [args.shape.size], args.alphabet)
    p = macdonald_poly(args.shape, args.alphabet, args.stat, args.threads)
    if args.part == "whittaker":
        p = p.coeff_of_q(n_stat(conjugate(args.shape)))
    elif args.part == "hall-littlewood":
        p = p.coeff_of_q(0)
    out.write(p.to_text())
    return 0


def cmd_profile(args, out):
    _check_bounds(args, [args.shape.size], args.alphabet)
    prof = stat_profile(args.shape, args.alphabet, args.stat, args.threads)
    for (rows, m, v), count in sorted(prof.by_rows.items()):
        print(json.dumps({"rows": [list(r) for r in rows], "maj": m, "stat": v, "count": count}), file=out)
    return 0


def cmd_match(args, out):
    _check_bounds(args, [args.shape.size], args.alphabet)
    try:
        pairs = conjecture_match(args.shape, args.alphabet, args.threads)
    except ConjectureCounterexample as exc:
        print(f"error: counterexample: {exc}", file=sys.stderr)
        return 1
    for p in pairs:
        print(json.dumps(p.to_json()), file=out)
    return 0


def cmd_verify(args, out):
    suite = SUITES[args.suite]
    if args.suite == "charge-equiv":
        _check_bounds(args, length=args.max_length)
        report = suite(max_length=args.max_length, max_letter=args.max_letter, threads=args.threads)
    else:
        if args.shape is not None:
            sizes = [args.shape.size]
        else:
            sizes = [p.size for p in partitions_up_to(args.max_size)] or [0]
        _check_bounds(args, sizes, args.alphabet)
        report = suite(shape=args.shape, max_size=args.max_size, n=args.alphabet, threads=args.threads)
    out.write(report.text())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="macfill", description="Fillings, charge, and modified Macdonald polynomial models.")
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write output to FILE instead of stdout")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--ceiling-size", type=int, default=DEFAULT_CEILINGS["size"])
    common.add_argument("--ceiling-alphabet", type=int, default=DEFAULT_CEILINGS["alphabet"])
    common.add_argument("--ceiling-length", type=int, default=DEFAULT_CEILINGS["length"])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("stats", parents=[common], help="statistics of one filling")
    p.add_argument("file", help="filling JSON file, or - for stdin")
    p.add_argument("--order", choices=ORDERS, default="standard")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("build", parents=[common], help="construct an extremal filling from row contents")
    p.add_argument("kind", choices=sorted(BUILDERS))
    p.add_argument("file", help="JSON array of rows (sets or multisets), or - for stdin")
    p.add_argument("--shape", type=_parse_shape)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("map", parents=[common], help="apply phi or varphi to a filling")
    p.add_argument("bijection", choices=["phi", "varphi"])
    p.add_argument("file")
    p.set_defaults(func=cmd_map)

    for verb, func, helptext in (
        ("poly", cmd_poly, "monomial expansion as text"),
        ("profile", cmd_profile, "joint (rows, maj, stat) distribution"),
        ("match", cmd_match, "row-equivalent maj-preserving matching quinv -> inv"),
    ):
        p = sub.add_parser(verb, parents=[common], help=helptext)
        p.add_argument("--shape", type=_parse_shape, required=True)
        p.add_argument("--alphabet", type=int, default=3)
        if verb != "match":
            p.add_argument("--stat", choices=["inv", "quinv"], default="inv")
        if verb == "poly":
            p.add_argument("--part", choices=["full", "whittaker", "hall-littlewood"], default="full")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive verification suite")
    p.add_argument("suite", choices=list(SUITES))
    p.add_argument("--shape", type=_parse_shape)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--alphabet", type=int, default=3)
    p.add_argument("--max-length", type=int, default=8)
    p.add_argument("--max-letter", type=int, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        with _output(args.out) as out:
            return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

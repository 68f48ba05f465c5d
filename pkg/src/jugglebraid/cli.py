"""Command-line interface.

Every subcommand prints one JSON object with a ``schema`` field; domain
errors print an error object and exit with status 1, usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .braid import as_braid, mirror
from .compiler import compile_word, verify_roundtrip
from .errors import JuggleError
from .invariants import closure_invariants
from .mapping import extract_braid
from .render import render_diagram
from .search import SearchSpec, search_indices
from .siteswap import parse_siteswap, site_swap, validate

SCHEMA = "jugglebraid.{}/1"


def _emit(kind: str, payload: dict, stream) -> None:
    doc = {"schema": SCHEMA.format(kind)}
    doc.update(payload)
    json.dump(doc, stream, indent=2, sort_keys=False)
    stream.write("\n")


def _word_out(word, flip: bool):
    return mirror(word) if flip else word


def cmd_info(args):
    seq = parse_siteswap(args.sequence)
    report = validate(seq)
    return "info", {"sequence": str(seq), **report.to_dict()}


def cmd_braid(args):
    seq = parse_siteswap(args.sequence)
    ex = extract_braid(seq, args.copies, start=args.start)
    word = _word_out(ex.word if not args.raw else ex.raw, args.mirror)
    return "braid", {
        "sequence": str(seq),
        "copies": args.copies,
        "window": [str(ex.resolution.diagram.t0), str(ex.resolution.diagram.t1)],
        "params": ex.params.to_dict(),
        "crossings": len(ex.crossings),
        "word": str(word),
        "letters": list(word.letters),
        "reduced": not args.raw,
        "mirrored": args.mirror,
    }


def cmd_link(args):
    seq = parse_siteswap(args.sequence)
    ex = extract_braid(seq, args.copies, start=args.start)
    inv = closure_invariants(ex.word)
    if args.mirror:
        inv = inv.mirror()
    return "link", {
        "sequence": str(seq),
        "copies": args.copies,
        "word": str(_word_out(ex.word, args.mirror)),
        "mirrored": args.mirror,
        **inv.to_dict(),
    }


def cmd_compile(args):
    word = _word_out(as_braid(args.word), args.mirror)
    compiled = compile_word(word, max_balls=args.max_balls, literal=args.literal)
    return "compile", {"mirrored": args.mirror, "literal": args.literal, **compiled.to_dict()}


def cmd_roundtrip(args):
    word = _word_out(as_braid(args.word), args.mirror)
    rt = verify_roundtrip(word, max_balls=args.max_balls, literal=args.literal)
    out = rt.to_dict()
    out["matched"] = rt.matched
    out["literal"] = args.literal
    out["mirrored"] = args.mirror
    return "roundtrip", out


def cmd_swap(args):
    seq = parse_siteswap(args.sequence)
    out = site_swap(seq, args.a, args.b)
    return "swap", {
        "sequence": str(seq),
        "a": args.a,
        "b": args.b,
        "result": str(out),
        "values": list(out.values),
        "ball_count": validate(out).ball_count,
    }


def cmd_render(args):
    seq = parse_siteswap(args.sequence)
    text = render_diagram(seq, args.copies, args.format, args.output)
    if args.output is None:
        return None, text
    return "render", {
        "sequence": str(seq),
        "copies": args.copies,
        "format": args.format,
        "path": args.output,
        "bytes": len(text.encode("utf-8")),
    }


def cmd_search(args):
    spec = SearchSpec(args.target, args.max_balls, args.max_throw, args.max_period, args.max_copies)
    report = search_indices(spec, n_jobs=args.jobs)
    return "search", report.to_dict()


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _half_integer(text):
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text}") from None
    if v.denominator != 2:
        raise argparse.ArgumentTypeError(f"window start must be a half-integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jugglebraid",
        description="Juggling sequences as braids and links, and braids as juggling sequences.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--mirror",
        action="store_true",
        help="flip the chirality of reported words and polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("info", help="validate a sequence and report ball count and periods")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_info)

    for name, func, text in (
        ("braid", cmd_braid, "braid word of k adjacent fundamental chambers"),
        ("link", cmd_link, "closure invariants of k adjacent chambers"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("sequence")
        p.add_argument("-k", "--copies", type=_positive, default=1)
        p.add_argument(
            "--start",
            type=_half_integer,
            default=Fraction(-1, 2),
            help="window start, a half-integer (default -1/2)",
        )
        if name == "braid":
            p.add_argument("--raw", action="store_true", help="do not reduce the word")
        p.set_defaults(func=func)

    for name, func, text in (
        ("compile", cmd_compile, "juggling sequence realizing a braid word"),
        ("roundtrip", cmd_roundtrip, "compile a word, extract it again and compare"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("word", help='braid word such as "B3: 1 -2"')
        p.add_argument("--max-balls", type=_positive, default=None)
        p.add_argument(
            "--literal",
            action="store_true",
            help="place every swap in the first half of its chamber",
        )
        p.set_defaults(func=func)

    p = sub.add_parser("swap", help="exchange the landing sites of beats A < B")
    p.add_argument("sequence")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_swap)

    p = sub.add_parser("render", help="draw the ladder diagram")
    p.add_argument("sequence")
    p.add_argument("-k", "--copies", type=_positive, default=1)
    p.add_argument("-f", "--format", choices=("svg", "ascii"), default="svg")
    p.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("search", help="ball and throw index of a link within bounds")
    p.add_argument("target", help="unknot, unlink-K, hopf, trefoil, figure8, borromean or a braid word")
    p.add_argument("--max-balls", type=_positive, default=3)
    p.add_argument("--max-throw", type=_positive, default=5)
    p.add_argument("--max-period", type=_positive, default=4)
    p.add_argument("--max-copies", type=_positive, default=3)
    p.add_argument("-j", "--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except JuggleError as exc:
        _emit("error", exc.to_dict(), stdout)
        return 1
    except OSError as exc:
        _emit("error", {"error": "IOError", "message": str(exc)}, stdout)
        return 1
    kind, payload = result
    if kind is None:
        stdout.write(payload)
    else:
        _emit(kind, payload, stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())

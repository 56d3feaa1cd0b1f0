"""Command-line interface: ``weylalt altset | sequence | verify``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from .altset import SEQUENCE_VARIANTS, cardinality_sequence
from .multiplicity import alternation_set, terms
from .rootsys import LieType, RankError, build_root_system, special_weight
from .verify import SUITES, run_suite
from .weylgroup import DEFAULT_CAP, GroupTooLarge, format_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

NAMED_WEIGHTS = {
    "highest": "highest_root",
    "zero": "zero",
    "omega1": "omega1_B",
    "omega2": "omega2_C",
}


class UsageError(Exception):
    pass


def parse_weight(rs, spec: str) -> tuple[int, ...]:
    """A named weight or explicit root coordinates such as ``1,2,2``."""
    key = spec.strip().lower()
    if key in NAMED_WEIGHTS:
        try:
            return special_weight(rs, NAMED_WEIGHTS[key])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    body = key.strip("[]()")
    try:
        coords = tuple(int(x) for x in body.replace(" ", ",").split(",") if x)
    except ValueError:
        raise UsageError(f"invalid weight {spec!r}") from None
    if len(coords) != rs.rank:
        raise UsageError(f"weight {spec!r} needs {rs.rank} root coordinates")
    return coords


def _lie_type(text: str) -> LieType:
    try:
        return LieType(text.upper())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown type {text!r}") from None


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _coords(c) -> str:
    return "[" + ",".join(str(x) for x in c) + "]"


# -- altset ----------------------------------------------------------------


def render_altset(lt: LieType, rank: int, lam, mu, items, fmt: str) -> str:
    rows = [
        {
            "word": format_word(t.word),
            "length": t.length,
            "string": list(t.string),
            "kostant_q": t.pq.to_json(),
            "kostant": t.value,
        }
        for t in items
    ]
    if fmt == "json":
        return _dump({"type": lt.value, "rank": rank, "lambda": list(lam), "mu": list(mu), "elements": rows})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["word", "length", "string", "kostant_q", "kostant"])
        for t, row in zip(items, rows):
            w.writerow([row["word"], row["length"], _coords(t.string), t.pq.format(), row["kostant"]])
        return buf.getvalue()
    lines = ["word | length | string | kostant_q | kostant"]
    lines += [f"{format_word(t.word)} | {t.length} | {_coords(t.string)} | {t.pq.format()} | {t.value}" for t in items]
    return "\n".join(lines) + "\n"


def cmd_altset(args) -> int:
    try:
        rs = build_root_system(args.type, args.rank)
    except RankError as exc:
        raise UsageError(str(exc)) from None
    lam = parse_weight(rs, args.lambda_)
    mu = parse_weight(rs, args.mu)
    alt = alternation_set(rs, lam, mu, cap=args.cap, workers=args.threads)
    sys.stdout.write(render_altset(rs.lie_type, args.rank, lam, mu, terms(alt), args.format))
    return EXIT_OK


# -- sequence --------------------------------------------------------------


def render_sequence(lt: LieType, variant: str, start: int, values: Sequence[int], fmt: str) -> str:
    pairs = list(enumerate(values, start))
    if fmt == "bfile":
        return "".join(f"{n} {v}\n" for n, v in pairs)
    if fmt == "json":
        return _dump({"type": lt.value, "variant": variant, "from": start, "values": list(values)})
    if fmt == "csv":
        return "n,value\n" + "".join(f"{n},{v}\n" for n, v in pairs)
    return "\n".join(f"{n} | {v}" for n, v in pairs) + "\n"


def cmd_sequence(args) -> int:
    lt = args.type
    if args.variant not in SEQUENCE_VARIANTS[lt]:
        raise UsageError(f"variant {args.variant!r} is not available for type {lt.value}")
    try:
        values = cardinality_sequence(lt, args.from_, args.to, args.variant)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(render_sequence(lt, args.variant, args.from_, values, args.format))
    return EXIT_OK


# -- verify ----------------------------------------------------------------


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_rank, cap=args.cap, workers=args.threads)
    sys.stdout.write(json.dumps(report, indent=1) + "\n")
    return EXIT_OK if report["pass"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS, help="worker processes for group scans")
    common.add_argument("--cap", type=_positive, default=argparse.SUPPRESS, help="largest Weyl group to enumerate")

    p = argparse.ArgumentParser(prog="weylalt", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("altset", parents=[common], help="alternation set with per-element data")
    a.add_argument("--type", type=_lie_type, required=True)
    a.add_argument("--rank", type=int, required=True)
    a.add_argument("--lambda", dest="lambda_", default="highest")
    a.add_argument("--mu", default="zero")
    a.add_argument("--format", choices=("table", "json", "csv"), default="table")
    a.set_defaults(func=cmd_altset)

    s = sub.add_parser("sequence", parents=[common], help="cardinalities of A(hr, 0) by rank")
    s.add_argument("--type", type=_lie_type, required=True)
    s.add_argument("--from", dest="from_", type=int, required=True)
    s.add_argument("--to", type=int, required=True)
    s.add_argument("--variant", choices=("total", "P", "N", "M"), default="total")
    s.add_argument("--format", choices=("table", "json", "csv", "bfile"), default="table")
    s.set_defaults(func=cmd_sequence)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--max-rank", type=_positive, default=None)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.threads = getattr(args, "threads", None) or os.cpu_count() or 1
    args.cap = getattr(args, "cap", None) or DEFAULT_CAP
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"weylalt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GroupTooLarge as exc:
        print(f"weylalt: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: count, sequence, enumerate, verify, render,
encode, decode.

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
or validation errors.
"""

import argparse
import json
import sys

from . import counting, verify
from .errors import OpenPartError, RangeError
from .poset import (
    DEFAULT_BRUTEFORCE_CAP,
    Partition,
    count_open_partitions,
    enumerate_open_partitions,
)
from .render import RenderSpec, to_dot
from .vposet import VTriple, build_vposet, decode, encode, enumerate_triples

_SINGLE_FORMULAS = {
    "squares": counting.np_sum_of_squares,
    "product-minus": counting.np_product_minus,
    "closed": counting.np_closed,
}


def _add_mn(parser):
    parser.add_argument("--m", type=int, required=True, help="left chain length (root included)")
    parser.add_argument("--n", type=int, required=True, help="right chain length (root included)")


def _resolve_cap(args):
    cap = getattr(args, "cap", None)
    if cap is not None and cap > DEFAULT_BRUTEFORCE_CAP:
        print(
            f"warning: brute-force cap raised to {cap} vertices; "
            "Bell numbers grow superexponentially",
            file=sys.stderr,
        )
    return cap


def _check_chain_lengths(args):
    if args.m < 1 or args.n < 1:
        raise RangeError(f"chain lengths must be >= 1, got ({args.m}, {args.n})")


def _write_json_stream(docs):
    out = sys.stdout
    out.write("[")
    first = True
    for doc in docs:
        out.write("\n  " if first else ",\n  ")
        out.write(json.dumps(doc))
        first = False
    out.write("\n]\n" if not first else "]\n")


def _cmd_count(args) -> int:
    _check_chain_lengths(args)
    if args.formula == "brute-force":
        v = build_vposet(args.m, args.n)
        value = count_open_partitions(v.underlying, _resolve_cap(args))
    elif args.formula == "double-sum":
        value = counting.np_double_sum(args.m, args.n)
    else:
        if args.m != args.n:
            print(f"error: --formula {args.formula} requires --m equal to --n", file=sys.stderr)
            return 2
        value = _SINGLE_FORMULAS[args.formula](args.n)
    print(value)
    return 0


def _cmd_sequence(args) -> int:
    if args.max < 1:
        raise RangeError(f"--max must be >= 1, got {args.max}")
    values = counting.np_sequence(args.max, args.formula.replace("-", "_"))
    if args.json:
        print(json.dumps(values))
    else:
        for value in values:
            print(value)
    return 0


def _cmd_enumerate(args) -> int:
    _check_chain_lengths(args)
    v = build_vposet(args.m, args.n)
    if args.what == "triples":
        items = enumerate_triples(v)
        if args.json:
            _write_json_stream(tr.to_doc() for tr in items)
        else:
            for tr in items:
                left = ",".join(map(str, tr.left))
                right = ",".join(map(str, tr.right))
                print(f"left={left} right={right} t={tr.t}")
    else:
        items = enumerate_open_partitions(v.underlying, _resolve_cap(args))
        if args.json:
            _write_json_stream(pi.to_doc() for pi in items)
        else:
            for pi in items:
                print(" ".join("{" + ",".join(map(str, b)) + "}" for b in pi.blocks))
    return 0


def _cmd_verify(args) -> int:
    if args.max < 1 or args.oracle_max < 1:
        raise RangeError("--max and --oracle-max must be >= 1")
    results = verify.run_all(max_n=args.max, oracle_max=args.oracle_max)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}  {r.name.ljust(width)}  {r.detail}")
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def _cmd_render(args) -> int:
    _check_chain_lengths(args)
    v = build_vposet(args.m, args.n)
    partition = None
    if args.partition is not None:
        with open(args.partition, encoding="utf-8") as handle:
            partition = Partition.from_doc(json.load(handle))
    dot = to_dot(RenderSpec(v.underlying, partition))
    if args.output is None:
        sys.stdout.write(dot)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(dot)
    return 0


def _read_doc(args):
    if args.input is None:
        return json.load(sys.stdin)
    with open(args.input, encoding="utf-8") as handle:
        return json.load(handle)


def _cmd_encode(args) -> int:
    _check_chain_lengths(args)
    v = build_vposet(args.m, args.n)
    pi = Partition.from_doc(_read_doc(args))
    print(json.dumps(encode(v, pi).to_doc()))
    return 0


def _cmd_decode(args) -> int:
    _check_chain_lengths(args)
    v = build_vposet(args.m, args.n)
    tr = VTriple.from_doc(_read_doc(args))
    print(json.dumps(decode(v, tr).to_doc()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="openpart",
        description="Count, enumerate, and render open partitions of V-shaped posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print the number of open partitions of V(m, n)")
    _add_mn(p)
    p.add_argument(
        "--formula",
        choices=["double-sum", "squares", "product-minus", "closed", "brute-force"],
        default="double-sum",
        help="squares/product-minus/closed require m = n; brute-force obeys the vertex cap",
    )
    p.add_argument("--cap", type=int, default=None, help="override the brute-force vertex cap")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("sequence", help="print the counts for n = 1..max")
    p.add_argument("--max", type=int, required=True)
    p.add_argument(
        "--formula",
        choices=["double-sum", "squares", "product-minus", "closed"],
        default="closed",
    )
    p.add_argument("--json", action="store_true", help="emit a JSON array instead of lines")
    p.set_defaults(func=_cmd_sequence)

    p = sub.add_parser("enumerate", help="stream all open partitions (or triples) of V(m, n)")
    _add_mn(p)
    p.add_argument("--as", dest="what", choices=["partitions", "triples"], default="partitions")
    p.add_argument("--json", action="store_true", help="emit a JSON array instead of lines")
    p.add_argument("--cap", type=int, default=None, help="override the brute-force vertex cap")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run the invariant suite and print a pass/fail report")
    p.add_argument("--max", type=int, default=50, help="formula checks run for n = 1..max")
    p.add_argument("--oracle-max", type=int, default=4, help="brute-force checks run for m, n <= this")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="write the Hasse diagram of V(m, n) as DOT")
    _add_mn(p)
    p.add_argument("--partition", metavar="FILE.json", help="color nodes by this partition")
    p.add_argument("-o", "--output", metavar="FILE.dot", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("encode", help="partition JSON (file or stdin) -> triple JSON")
    _add_mn(p)
    p.add_argument("-i", "--input", metavar="FILE.json", help="partition document (default: stdin)")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="triple JSON (file or stdin) -> partition JSON")
    _add_mn(p)
    p.add_argument("-i", "--input", metavar="FILE.json", help="triple document (default: stdin)")
    p.set_defaults(func=_cmd_decode)

    return parser


def run(argv=None) -> int:
    """Parse argv and execute one subcommand; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except OpenPartError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

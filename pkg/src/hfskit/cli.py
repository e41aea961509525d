"""Command-line interface: ``hfskit <command> ...``.

Exit status is 0 on success, 1 on domain errors and 2 on usage errors.
"""

import argparse
import os
import sys

from . import config
from .errors import HfsError
from .graphs import (
    compress_dag,
    contains_dag,
    decorate,
    digraph_to_nat,
    from_json,
    member_dag,
    nat_to_digraph,
    to_dot,
    to_json,
    transpose_nat,
)
from .hfs import (
    hfs_to_nat,
    hypergraph_to_nat,
    nat_to_hfs,
    nat_to_hypergraph,
    parse_hfs,
    parse_hypergraph,
    print_hfs,
    print_hypergraph,
)
from .ordinal import nat_choice_fun, nat_ordinal, nat_powset
from .pairing import SCHEMES
from .streams import nat_stream
from .transport import nat_adduction, nat_difference, nat_intersection, nat_size, nat_union

SETOPS = {
    "union": nat_union,
    "intersection": nat_intersection,
    "difference": nat_difference,
    "adduction": nat_adduction,
}


def nat(text):
    text = text.strip()
    if not text.isdigit() or not text.isascii():
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return int(text)


def positive(text):
    value = nat(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _read_arg(text):
    return sys.stdin.read() if text == "-" else text


def _decode(kind, n, ulimit):
    if kind == "hfs":
        return print_hfs(nat_to_hfs(n, ulimit))
    if kind == "hypergraph":
        return print_hypergraph(nat_to_hypergraph(n))
    return to_json(nat_to_digraph(n))


def cmd_encode(args):
    text = _read_arg(args.text)
    if args.kind == "hfs":
        return hfs_to_nat(parse_hfs(text, args.ulimit), args.ulimit)
    if args.kind == "hypergraph":
        return hypergraph_to_nat(parse_hypergraph(text))
    return digraph_to_nat(from_json(text))


def cmd_decode(args):
    return _decode(args.kind, args.n, args.ulimit)


def cmd_enum(args):
    for n in nat_stream():
        if n >= args.count:
            break
        print(_decode(args.kind, n, args.ulimit), flush=True)


def cmd_pair(args):
    return SCHEMES[args.scheme].pair(args.a, args.b)


def cmd_unpair(args):
    first, second = SCHEMES[args.scheme].unpair(args.z)
    return f"{first} {second}"


def cmd_size(args):
    return nat_size(args.n, args.ulimit)


def cmd_setop(args):
    return SETOPS[args.op](args.a, args.b)


def cmd_graph(args):
    if args.view == "contains":
        g = contains_dag(args.n, args.ulimit)
    elif args.view == "member":
        g = member_dag(args.n, args.ulimit)
    elif args.view == "compressed":
        g = compress_dag(args.n)
    else:
        g = nat_to_digraph(args.n)
    return to_dot(g).rstrip("\n") if args.format == "dot" else to_json(g)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-bits", type=positive, default=None,
                        help="bit-length cap for exponentiating operations")
    with_ulimit = argparse.ArgumentParser(add_help=False)
    with_ulimit.add_argument("--ulimit", type=nat, default=0)
    kinds = ["hfs", "hypergraph", "digraph"]

    parser = argparse.ArgumentParser(prog="hfskit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common, with_ulimit], help="text to code")
    p.add_argument("text", help="brace notation (or graph JSON); '-' reads stdin")
    p.add_argument("--kind", choices=kinds, default="hfs")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common, with_ulimit], help="code to text")
    p.add_argument("n", type=nat)
    p.add_argument("--kind", choices=kinds, default="hfs")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("enum", parents=[common, with_ulimit], help="first objects in rank order")
    p.add_argument("kind", choices=kinds)
    p.add_argument("--count", type=nat, default=10)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("pair", parents=[common], help="pair two naturals")
    p.add_argument("a", type=nat)
    p.add_argument("b", type=nat)
    p.add_argument("--scheme", choices=sorted(SCHEMES), default="bitmerge")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("unpair", parents=[common], help="split a natural into a pair")
    p.add_argument("z", type=nat)
    p.add_argument("--scheme", choices=sorted(SCHEMES), default="bitmerge")
    p.set_defaults(func=cmd_unpair)

    p = sub.add_parser("size", parents=[common, with_ulimit], help="structural size")
    p.add_argument("n", type=nat)
    p.set_defaults(func=cmd_size)

    p = sub.add_parser("setop", parents=[common], help="set operation on codes")
    p.add_argument("op", choices=sorted(SETOPS))
    p.add_argument("a", type=nat)
    p.add_argument("b", type=nat)
    p.set_defaults(func=cmd_setop)

    for name, fn, help_ in [
        ("powset", nat_powset, "code of the powerset"),
        ("ordinal", nat_ordinal, "code of a von Neumann ordinal"),
        ("choice", nat_choice_fun, "code of the smallest-element choice function"),
        ("transpose", transpose_nat, "reverse the edges of an encoded digraph"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("n", type=nat)
        p.set_defaults(func=lambda args, fn=fn: fn(args.n))

    p = sub.add_parser("graph", parents=[common, with_ulimit], help="graph view of a code")
    p.add_argument("n", type=nat)
    p.add_argument("--view", choices=["contains", "member", "compressed", "digraph"],
                   default="contains")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("dag", parents=[common], help="decorate a DAG given as JSON")
    p.add_argument("graph", help="graph JSON; '-' reads stdin")
    p.set_defaults(func=lambda args: decorate(from_json(_read_arg(args.graph))))

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    sys.set_int_max_str_digits(0)

    bits = args.max_bits
    if bits is None:
        raw = os.environ.get(config.ENV_VAR)
        if raw:
            try:
                bits = positive(raw)
            except argparse.ArgumentTypeError as exc:
                parser.error(f"{config.ENV_VAR}: {exc}")
    try:
        with config.max_bits(bits or config.DEFAULT_MAX_BITS):
            result = args.func(args)
    except HfsError as exc:
        print(f"hfskit: error: {exc}", file=sys.stderr)
        return 1
    if result is not None:
        print(result)
    return 0


if __name__ == "__main__":
    sys.exit(main())

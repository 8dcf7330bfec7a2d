"""
Commands that work on single integers and digit strings: encode, decode, succ, blocks
"""

from chung_graham.analysis.blocks import decompose, format_blocks, successors
from chung_graham.cli.output import emit, fail, parse_natural
from chung_graham.core.codec import decode, encode
from chung_graham.core.config import EXIT_CODES
from chung_graham.core.rule import CoefficientSequence, params, validate


def cmd_encode(args) -> int:
    n = parse_natural(args.n)
    eps = encode(n, args.d)

    if args.verify:
        p = params(args.d)
        violation = validate(eps, p)
        value = decode(eps, args.d)
        if violation is not None or value != n:
            fail(f"self-check failed for n={n}: decoded {value}, rule: {violation or 'ok'}")
            return EXIT_CODES["internal"]

    emit(args, "encode", {"d": args.d, "n": n, "digits": list(eps.digits)}, eps.to_text())
    return EXIT_CODES["ok"]


def cmd_decode(args) -> int:
    eps = CoefficientSequence.from_text(args.digits)
    value = decode(eps, args.d)

    if args.strict:
        violation = validate(eps, params(args.d))
        if violation is not None:
            fail(f"invalid digit string: {violation}")
            return EXIT_CODES["domain"]

    emit(args, "decode", {"d": args.d, "digits": list(eps.digits), "value": value}, str(value))
    return EXIT_CODES["ok"]


def cmd_succ(args) -> int:
    if args.count < 0:
        fail(f"--count must be non-negative, got {args.count}")
        return EXIT_CODES["usage"]

    start = CoefficientSequence.from_text(args.digits)
    stream = list(successors(start, args.count, params(args.d)))
    emit(
        args,
        "succ",
        {"d": args.d, "start": list(start.digits), "successors": [list(eps.digits) for eps in stream]},
        [eps.to_text() for eps in stream],
    )
    return EXIT_CODES["ok"]


def cmd_blocks(args) -> int:
    eps = CoefficientSequence.from_text(args.digits)
    blocks = decompose(eps, params(args.d))
    emit(
        args,
        "blocks",
        {
            "d": args.d,
            "digits": list(eps.digits),
            "blocks": [{"kind": block.kind.value, "digits": list(block.digits)} for block in blocks],
        },
        format_blocks(blocks, unicode=args.unicode),
    )
    return EXIT_CODES["ok"]


def register(subparsers, common, interval) -> None:
    """Add the encode, decode, succ and blocks subcommands"""
    parents = [common, interval]

    parser = subparsers.add_parser("encode", parents=parents, help="Encode a non-negative integer")
    parser.add_argument("n", help="Non-negative decimal integer (any size)")
    parser.add_argument("--verify", action="store_true", help="Decode the result and check it round-trips")
    parser.set_defaults(handler=cmd_encode)

    parser = subparsers.add_parser("decode", parents=parents, help="Decode a little-endian digit string")
    parser.add_argument("digits", help='Comma-separated digits, lowest index first ("" is zero)')
    parser.add_argument("--strict", action="store_true", help="Fail with exit 3 if the string breaks the rule")
    parser.set_defaults(handler=cmd_decode)

    parser = subparsers.add_parser("succ", parents=parents, help="Print the next valid digit strings")
    parser.add_argument("digits", help="Valid starting digit string")
    parser.add_argument("--count", type=int, default=1, help="Number of successors to print (default: 1)")
    parser.set_defaults(handler=cmd_succ)

    parser = subparsers.add_parser("blocks", parents=parents, help="Decompose a digit string into blocks")
    parser.add_argument("digits", help="Digit string to decompose")
    parser.add_argument("--unicode", action="store_true", help="Join blocks with ∨ instead of v")
    parser.set_defaults(handler=cmd_blocks)

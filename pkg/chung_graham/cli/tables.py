"""
Commands that print constants and sequence tables: alpha, seq
"""

from chung_graham.cli.output import emit
from chung_graham.core.config import EXIT_CODES, SEQUENCE_TABLE_DEFAULTS
from chung_graham.core.sequences import alpha
from chung_graham.reports.generator import sequence_table


def cmd_alpha(args) -> int:
    value = alpha(args.digits)
    emit(args, "alpha", {"decimal_digits": args.digits, "value": value}, value)
    return EXIT_CODES["ok"]


def cmd_seq(args) -> int:
    table = sequence_table(args.d, args.max)

    if args.csv:
        text = table.to_csv(index=False).rstrip("\n")
    else:
        text = table.to_string(index=False)

    rows = [{column: int(value) for column, value in row.items()} for row in table.to_dict(orient="records")]
    emit(args, "seq", {"d": args.d, "rows": rows}, text)
    return EXIT_CODES["ok"]


def register(subparsers, common, interval) -> None:
    """Add the alpha and seq subcommands"""
    parser = subparsers.add_parser("alpha", parents=[common], help="Print the constant (1 + sum 1/F_2k)^-1")
    parser.add_argument(
        "digits", nargs="?", type=int, default=8, help="Decimal digits after the point (default: 8)"
    )
    parser.set_defaults(handler=cmd_alpha)

    parser = subparsers.add_parser("seq", parents=[common, interval], help="Tabulate k, H_k, K_k, F_k")
    parser.add_argument(
        "--max",
        type=int,
        default=SEQUENCE_TABLE_DEFAULTS["k_max"],
        help=f"Last k to print (default: {SEQUENCE_TABLE_DEFAULTS['k_max']})",
    )
    parser.add_argument("--csv", action="store_true", help="Print CSV instead of an aligned table")
    parser.set_defaults(handler=cmd_seq)

#!/usr/bin/env python3
"""
Command-line interface for the Chung-Graham numeration system
"""

import argparse
import logging
import sys
from typing import List, Optional

from chung_graham.cli import numerals, pipeline, tables
from chung_graham.cli.output import fail
from chung_graham.core.config import EXIT_CODES, configure_logging
from chung_graham.core.errors import (
    ConfigurationError,
    DeskScaleExceeded,
    DigitParseError,
    InvalidInput,
    NotDecomposable,
    UnsupportedInterval,
)

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Assemble the top-level parser with one subcommand per operation"""
    parser = argparse.ArgumentParser(
        prog="cgx",
        description="Encode, decode and enumerate integers in the Chung-Graham numeration system",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""Digit strings are little-endian: the FIRST digit multiplies H_1 = 1.

Examples:
  # Encode and decode for interval d = 4 (H = 1, 8, 55, 377, ...)
  cgx encode --d 4 119563
  cgx decode --d 4 "6,5,6,0,5,6"

  # Next three strings after zero for d = 2
  cgx succ --d 2 "" --count 3

  # Block decomposition
  cgx blocks --d 4 "5,5,6,0,5,6,0,2,5"

  # Exhaustive bijection check for order <= 5
  cgx verify --d 4 5

  # Base sequence table and the constant alpha
  cgx seq --d 4 --max 5
  cgx alpha 8
        """,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print a JSON envelope instead of text")

    interval = argparse.ArgumentParser(add_help=False)
    interval.add_argument("--d", type=int, required=True, help="Even interval d >= 2")

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    numerals.register(subparsers, common, interval)
    tables.register(subparsers, common, interval)
    pipeline.register(subparsers, common, interval)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the cgx CLI; returns the process exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    # Integers of any size are accepted as decimal text
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)

    try:
        return args.handler(args)
    except (UnsupportedInterval, DigitParseError, ConfigurationError) as e:
        fail(str(e))
        return EXIT_CODES["usage"]
    except (InvalidInput, NotDecomposable, DeskScaleExceeded) as e:
        fail(str(e))
        return EXIT_CODES["domain"]
    except ValueError as e:
        fail(str(e))
        return EXIT_CODES["usage"]
    except AssertionError as e:
        logger.exception("invariant failure")
        fail(f"internal check failed: {e}")
        return EXIT_CODES["internal"]
    except KeyboardInterrupt:
        fail("interrupted by user")
        return EXIT_CODES["internal"]


if __name__ == "__main__":
    sys.exit(main())

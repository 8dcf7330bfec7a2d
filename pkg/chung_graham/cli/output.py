"""
Text and JSON output shared by the CLI commands
"""

import json
import re
import sys
from typing import Dict, Iterable, Union

from chung_graham.core.errors import DigitParseError

_DECIMAL_RE = re.compile(r"^[0-9]+$")


def emit(args, command: str, payload: Dict, text: Union[str, Iterable[str]]) -> None:
    """
    Print a command result

    With --json the payload is wrapped in a stable-keyed envelope
    {"command", "format", "payload"}; otherwise the text form is printed,
    one line per item.
    """
    if getattr(args, "json", False):
        envelope = {"command": command, "format": "json", "payload": payload}
        print(json.dumps(envelope, sort_keys=True, ensure_ascii=False))
        return
    if isinstance(text, str):
        print(text)
    else:
        for line in text:
            print(line)


def fail(message: str) -> None:
    print(f"❌ {message}", file=sys.stderr)


def parse_natural(text: str) -> int:
    """Parse a non-negative decimal integer of any size"""
    body = text.strip()
    if not _DECIMAL_RE.match(body):
        raise DigitParseError(f"expected a non-negative decimal integer, got {text!r}")
    return int(body)

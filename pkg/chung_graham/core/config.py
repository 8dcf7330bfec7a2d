"""
Configuration for the Chung-Graham numeration tools
Contains the oracle size guard, CLI exit codes and output conventions
"""

import logging
import os

from chung_graham.core.errors import ConfigurationError

# Brute-force oracle guard: H_{L+1} must not exceed this many values.
# CGX_DESK_LIMIT overrides it for local experiments.
DESK_LIMIT_DEFAULT = 10**7
DESK_LIMIT_ENV = "CGX_DESK_LIMIT"

# Process exit codes shared by every CLI command
EXIT_CODES = {
    "ok": 0,
    "internal": 1,  # a self-check or invariant failed
    "usage": 2,  # bad arguments, bad digit text, bad interval
    "domain": 3,  # input is well-formed but outside the rule of expansion
}

# Digit strings are little-endian: the first digit multiplies H_1
DIGIT_SEPARATOR = ","

BLOCK_SEPARATORS = {
    "ascii": "v",
    "unicode": "∨",
}

BLOCK_TAGS = {
    "max": "max",
    "lower": "lower",
    "upper": "upper",
}

# (d, L) pairs checked by `cgx sweep`; each stays below the default desk limit
ACCEPTANCE_CONFIGURATIONS = [
    {"d": 2, "max_order": 10},
    {"d": 4, "max_order": 5},
    {"d": 6, "max_order": 4},
    {"d": 8, "max_order": 3},
]

SEQUENCE_TABLE_DEFAULTS = {
    "k_max": 10,
}

LOG_FORMAT = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"


def desk_limit() -> int:
    """
    Return the largest number of values the oracle may enumerate

    Reads CGX_DESK_LIMIT on every call so tests and shells can change it
    without reloading the module.

    Returns:
        The active limit (default 10**7)
    """
    raw = os.environ.get(DESK_LIMIT_ENV)
    if raw is None or raw.strip() == "":
        return DESK_LIMIT_DEFAULT

    try:
        value = int(raw.strip())
    except ValueError as e:
        raise ConfigurationError(f"{DESK_LIMIT_ENV} must be an integer, got {raw!r}") from e

    if value <= 0:
        raise ConfigurationError(f"{DESK_LIMIT_ENV} must be positive, got {value}")
    return value


def configure_logging(verbose: bool = False) -> None:
    """Install the root handler used by the CLI"""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
    )

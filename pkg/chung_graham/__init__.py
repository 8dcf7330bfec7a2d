"""
Chung-Graham Numeration Library
Unique digit expansions of non-negative integers over H_k = F_{2+d(k-1)} for even d
"""

__version__ = "1.0.0"

from chung_graham.core.sequences import alpha, base_term, check_norm_identity, fibonacci, lucas_k
from chung_graham.core.rule import (
    CoefficientSequence,
    Params,
    Violation,
    compare_lex,
    order,
    params,
    validate,
)
from chung_graham.core.codec import beta, decode, encode
from chung_graham.analysis.blocks import (
    Block,
    BlockKind,
    classify_trailing_block,
    decompose,
    is_member,
    lub,
    successors,
)
from chung_graham.analysis.oracle import BijectionReport, enumerate_valid, verify_bijection

__all__ = [
    "fibonacci",
    "lucas_k",
    "base_term",
    "check_norm_identity",
    "alpha",
    "CoefficientSequence",
    "Params",
    "Violation",
    "params",
    "order",
    "validate",
    "compare_lex",
    "beta",
    "decode",
    "encode",
    "Block",
    "BlockKind",
    "classify_trailing_block",
    "decompose",
    "is_member",
    "lub",
    "successors",
    "BijectionReport",
    "enumerate_valid",
    "verify_bijection",
]

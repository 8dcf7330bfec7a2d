"""
Brute-force ground truth at desk scale
Enumerates every valid digit string up to a given order and checks that the
values they represent are exactly 0, 1, ..., H_{L+1} - 1
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from chung_graham.analysis.blocks import Block, BlockKind, lower_blocks, lub, upper_blocks
from chung_graham.core.codec import beta, decode, encode
from chung_graham.core.config import desk_limit
from chung_graham.core.errors import DeskScaleExceeded
from chung_graham.core.rule import CoefficientSequence, Params, lex_key, params
from chung_graham.core.sequences import base_term

logger = logging.getLogger(__name__)

# Witness lists in a report are cut off after this many entries
MAX_WITNESSES = 20


@dataclass
class BijectionReport:
    """Outcome of checking that decode maps the valid strings of order <= L onto 0..H_{L+1}-1"""

    d: int
    max_order: int
    count: int
    expected: int
    min_value: Optional[int]
    max_value: Optional[int]
    duplicates: List[int] = field(default_factory=list)
    missing: List[int] = field(default_factory=list)
    lex_order_ok: bool = True
    encode_mismatches: List[int] = field(default_factory=list)
    successor_mismatches: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.count == self.expected
            and not self.duplicates
            and not self.missing
            and self.lex_order_ok
            and not self.encode_mismatches
            and not self.successor_mismatches
        )


def check_desk_scale(max_order: int, p: Params) -> int:
    """
    Return H_{L+1}, the number of valid strings of order <= L

    Raises:
        DeskScaleExceeded: H_{L+1} is above the active desk limit
    """
    if max_order < 1:
        raise ValueError(f"max order must be positive, got {max_order}")
    expected = base_term(p.d, max_order + 1)
    limit = desk_limit()
    if expected > limit:
        raise DeskScaleExceeded(expected, limit)
    return expected


def _enumerate_partition(max_order: int, p: Params, top_digits: Sequence[int]) -> List[Tuple[int, ...]]:
    """
    Depth-first enumeration from index L down to index 1

    Walking downward keeps two flags:
      a_open    an A sits above with nothing <= A-2 since (a second A would break item 3)
      run_to_a  the indices between here and the lowest A above are all A-1
                (reaching index 1 with it set forbids eps_1 = B, item 2)
    Strings come out padded to length L in lexicographic order.
    """
    A, B = p.A, p.B
    digits = [0] * max_order
    found: List[Tuple[int, ...]] = []

    def place(index: int, a_open: bool, run_to_a: bool) -> None:
        if index == 1:
            cap = B - 1 if run_to_a else B
            choices: Iterable[int] = top_digits if max_order == 1 else range(B + 1)
            for digit in choices:
                if digit > cap:
                    break
                digits[0] = digit
                found.append(tuple(digits))
            return

        choices = top_digits if index == max_order else range(A + 1)
        for digit in choices:
            if digit == A:
                if a_open:
                    continue
                state = (True, True)
            elif digit == A - 1:
                state = (a_open, run_to_a)
            else:
                state = (False, False)
            digits[index - 1] = digit
            place(index - 1, *state)
        digits[index - 1] = 0

    place(max_order, False, False)
    return found


def enumerate_valid(max_order: int, p: Params, workers: int = 1) -> List[CoefficientSequence]:
    """
    Return every valid digit string of order <= L, sorted by compare_lex

    Args:
        max_order: L
        p: Digit caps for the interval
        workers: Processes to spread the top digit over (1 runs in-process)

    Raises:
        DeskScaleExceeded: H_{L+1} is above the desk limit
    """
    check_desk_scale(max_order, p)
    top_cap = p.B if max_order == 1 else p.A

    if workers <= 1:
        padded = _enumerate_partition(max_order, p, range(top_cap + 1))
    else:
        partitions = [[digit] for digit in range(top_cap + 1)]
        logger.debug("d=%d L=%d: enumerating %d partitions on %d workers", p.d, max_order, len(partitions), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(
                _enumerate_partition,
                [max_order] * len(partitions),
                [p] * len(partitions),
                partitions,
            )
            padded = [digits for chunk in chunks for digits in chunk]

    sequences = [CoefficientSequence(digits) for digits in padded]
    sequences.sort(key=lex_key)
    logger.debug("d=%d L=%d: %d valid strings", p.d, max_order, len(sequences))
    return sequences


def _upper_fillings(length: int, p: Params) -> Iterable[Tuple[int, ...]]:
    # All concatenations of upper proper blocks covering exactly `length` indices
    if length == 0:
        yield ()
        return
    for order in range(1, length + 1):
        for block in upper_blocks(order, p):
            for rest in _upper_fillings(length - order, p):
                yield block.digits + rest


def enumerate_by_blocks(max_order: int, p: Params) -> List[CoefficientSequence]:
    """
    Build every string of order <= L from blocks, without consulting the rule

    Each string is beta(n) or a lower proper block, followed by upper proper
    blocks; all concatenations are padded to L indices, so each string is
    produced once through its own decomposition followed by (0) blocks.
    """
    check_desk_scale(max_order, p)
    heads: List[Block] = []
    for order in range(1, max_order + 1):
        heads.append(Block(BlockKind.MAX, beta(order, p).digits))
        heads.extend(lower_blocks(order, p))

    sequences = []
    for head in heads:
        for tail in _upper_fillings(max_order - head.order, p):
            sequences.append(CoefficientSequence(head.digits + tail))
    sequences.sort(key=lex_key)
    return sequences


def verify_bijection(max_order: int, d: int, workers: int = 1) -> BijectionReport:
    """
    Check that the valid strings of order <= L decode onto 0..H_{L+1}-1

    Besides the value multiset this confirms that the lex-sorted list decodes
    to consecutive integers, that encode reproduces every string from its
    value, and that lub steps from each string to the next one in the list.

    Args:
        max_order: L
        d: Even interval
        workers: Processes for the enumeration

    Returns:
        BijectionReport; report.ok is True when every check passes
    """
    p = params(d)
    expected = check_desk_scale(max_order, p)
    sequences = enumerate_valid(max_order, p, workers=workers)

    values = np.fromiter((decode(eps, d) for eps in sequences), dtype=np.int64, count=len(sequences))
    counts = np.bincount(values, minlength=expected)
    duplicates = np.flatnonzero(counts > 1)[:MAX_WITNESSES].tolist()
    missing = np.flatnonzero(counts[:expected] == 0)[:MAX_WITNESSES].tolist()
    lex_order_ok = bool(np.array_equal(values, np.arange(expected, dtype=np.int64)))

    encode_mismatches = []
    for eps, value in zip(sequences, values.tolist()):
        if encode(value, d) != eps:
            encode_mismatches.append(value)
            if len(encode_mismatches) >= MAX_WITNESSES:
                break

    successor_mismatches = []
    for current, following, value in zip(sequences, sequences[1:], values.tolist()):
        if lub(current, p) != following:
            successor_mismatches.append(value)
            if len(successor_mismatches) >= MAX_WITNESSES:
                break

    report = BijectionReport(
        d=d,
        max_order=max_order,
        count=len(sequences),
        expected=expected,
        min_value=int(values.min()) if len(values) else None,
        max_value=int(values.max()) if len(values) else None,
        duplicates=duplicates,
        missing=missing,
        lex_order_ok=lex_order_ok,
        encode_mismatches=encode_mismatches,
        successor_mismatches=successor_mismatches,
    )
    logger.debug("d=%d L=%d: bijection %s", d, max_order, "ok" if report.ok else "FAILED")
    return report

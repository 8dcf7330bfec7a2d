"""
Block decomposition and the successor operator
Splits valid digit strings into maximal and proper blocks and steps through
the valid strings in lexicographic order
"""

import enum
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple, Union

from chung_graham.core.codec import beta
from chung_graham.core.config import BLOCK_SEPARATORS, BLOCK_TAGS
from chung_graham.core.errors import InvalidInput, NotDecomposable
from chung_graham.core.rule import CoefficientSequence, Params, validate


class BlockKind(enum.Enum):
    MAX = BLOCK_TAGS["max"]
    LOWER = BLOCK_TAGS["lower"]
    UPPER = BLOCK_TAGS["upper"]


@dataclass(frozen=True)
class Block:
    """
    One segment of a block decomposition

    digits keeps the segment exactly as it sits in the string, leading zero
    included, so (0) and (0, 5, 6) are distinct blocks. An upper proper block
    is also a lower proper block; the kind records the narrowest one.
    """

    kind: BlockKind
    digits: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.digits)

    @property
    def is_lower_proper(self) -> bool:
        return self.kind in (BlockKind.LOWER, BlockKind.UPPER)

    def to_text(self, tagged: bool = False) -> str:
        text = "(" + ",".join(str(digit) for digit in self.digits) + ")"
        # Maximal blocks are always marked
        if tagged or self.kind is BlockKind.MAX:
            text += f"[{self.kind.value}]"
        return text


def _first_block_kind(lead: int, order: int, p: Params) -> Optional[BlockKind]:
    # The block that covers index 1 may be maximal or lower proper.
    if order == 1:
        if lead == p.B:
            return BlockKind.MAX
        if lead <= p.A - 1:
            return BlockKind.UPPER
        if lead <= p.B - 1:
            return BlockKind.LOWER
        return None
    if lead == p.B - 1:
        return BlockKind.MAX
    if lead <= p.A - 2:
        return BlockKind.UPPER
    if lead <= p.B - 2:
        return BlockKind.LOWER
    return None


def _trailing_block(digits: Tuple[int, ...], end: int, p: Params) -> Tuple[BlockKind, int]:
    """Classify the block ending at 1-based index `end`; return its kind and start index"""
    A = p.A
    last = digits[end - 1]

    if end == 1:
        kind = _first_block_kind(last, 1, p)
        if kind is None:
            raise NotDecomposable(1)
        return kind, 1

    if last < A:
        return BlockKind.UPPER, end
    if last > A:
        raise NotDecomposable(end)

    # A trailing A pulls in the run of A-1 below it and one leading digit.
    start = end - 1
    while start >= 2 and digits[start - 1] == A - 1:
        start -= 1
    lead = digits[start - 1]

    if start == 1:
        kind = _first_block_kind(lead, end, p)
        if kind is None:
            raise NotDecomposable(1)
        return kind, 1

    if lead <= A - 2:
        return BlockKind.UPPER, start
    raise NotDecomposable(start)


def classify_trailing_block(eps: CoefficientSequence, p: Params) -> Tuple[Block, CoefficientSequence]:
    """
    Split off the block that ends at ord(eps)

    Args:
        eps: Nonzero digit string
        p: Digit caps for the interval

    Returns:
        Tuple of (block, remaining prefix)

    Raises:
        NotDecomposable: No block kind fits the trailing segment
    """
    if eps.is_zero:
        return Block(BlockKind.UPPER, (0,)), eps
    digits = eps.digits
    kind, start = _trailing_block(digits, len(digits), p)
    return Block(kind, digits[start - 1 :]), CoefficientSequence(digits[: start - 1])


def decompose(eps: CoefficientSequence, p: Params) -> List[Block]:
    """
    Decompose eps into blocks, lowest index first

    The first block is maximal or lower proper (possibly upper proper, which
    is the narrower kind); every later block is upper proper. Internal zeros
    become order-1 blocks (0). The zero string decomposes as [(0)].

    Raises:
        NotDecomposable: eps is outside the set built from blocks
    """
    if eps.is_zero:
        return [Block(BlockKind.UPPER, (0,))]

    digits = eps.digits
    blocks = []
    end = len(digits)
    while end > 0:
        kind, start = _trailing_block(digits, end, p)
        blocks.append(Block(kind, digits[start - 1 : end]))
        end = start - 1
    blocks.reverse()
    return blocks


def is_member(eps: CoefficientSequence, p: Params) -> bool:
    """True iff eps has a block decomposition"""
    try:
        decompose(eps, p)
    except NotDecomposable:
        return False
    return True


def format_blocks(blocks: List[Block], unicode: bool = False, tagged: bool = False) -> str:
    """Join blocks as "(5,5,6)v(0,5,6)v(0)"; maximal blocks carry a [max] tag"""
    separator = BLOCK_SEPARATORS["unicode" if unicode else "ascii"]
    return separator.join(block.to_text(tagged=tagged) for block in blocks)


def upper_blocks(order: int, p: Params) -> Iterator[Block]:
    """Yield every upper proper block of the given order in lex order"""
    if order < 1:
        raise ValueError(f"block order must be positive, got {order}")
    if order == 1:
        for lead in range(p.A):
            yield Block(BlockKind.UPPER, (lead,))
        return
    tail = (p.A - 1,) * (order - 2) + (p.A,)
    for lead in range(p.A - 1):
        yield Block(BlockKind.UPPER, (lead,) + tail)


def lower_blocks(order: int, p: Params) -> Iterator[Block]:
    """Yield every lower proper block of the given order in lex order, upper ones included"""
    if order < 1:
        raise ValueError(f"block order must be positive, got {order}")
    if order == 1:
        cap, tail = p.B - 1, ()
    else:
        cap, tail = p.B - 2, (p.A - 1,) * (order - 2) + (p.A,)
    for lead in range(cap + 1):
        kind = _first_block_kind(lead, order, p)
        yield Block(kind, (lead,) + tail)


def concat(*parts: Union[Block, CoefficientSequence]) -> CoefficientSequence:
    """
    Concatenate blocks or digit strings; each part occupies ord(part) indices

    A zero digit string contributes the single digit 0.
    """
    digits: Tuple[int, ...] = ()
    for part in parts:
        if isinstance(part, Block):
            digits += part.digits
        else:
            digits += part.digits or (0,)
    return CoefficientSequence(digits)


def beta_prefix_order(eps: CoefficientSequence, p: Params) -> Optional[int]:
    """
    Return the n with (eps_1, ..., eps_n) = beta(n), or None

    At most one n qualifies: beta(1) starts with B and the others with B-1,
    and among the latter the first A after the run of A-1 fixes n.
    """
    return _beta_prefix(eps.digits, p)


def _beta_prefix(digits: Tuple[int, ...], p: Params) -> Optional[int]:
    if not digits:
        return None
    first = digits[0]
    if first == p.B:
        return 1
    if first != p.B - 1:
        return None
    k = 1
    while k < len(digits) and digits[k] == p.A - 1:
        k += 1
    if k < len(digits) and digits[k] == p.A:
        return k + 1
    return None


def _successor(digits: Tuple[int, ...], p: Params) -> Tuple[int, ...]:
    n = _beta_prefix(digits, p)
    if n is None:
        if not digits:
            return (1,)
        return (digits[0] + 1,) + digits[1:]

    assert digits[:n] == beta(n, p).digits, f"beta prefix mismatch at order {n}"
    carried = digits[n] + 1 if n < len(digits) else 1
    return (0,) * n + (carried,) + digits[n + 1 :]


def lub(eps: CoefficientSequence, p: Params) -> CoefficientSequence:
    """
    Return the least valid digit string greater than eps

    Without a maximal prefix the first digit goes up by one. With
    (eps_1, ..., eps_n) = beta(n) those n digits become 0 and eps_{n+1} goes up
    by one, mirroring 1 + decode(beta(n)) = H_{n+1}.

    Raises:
        InvalidInput: eps breaks the rule of expansion
    """
    violation = validate(eps, p)
    if violation is not None:
        raise InvalidInput(violation)
    return CoefficientSequence._trusted(_successor(eps.digits, p))


def successors(start: CoefficientSequence, count: int, p: Params) -> Iterator[CoefficientSequence]:
    """
    Lazily yield lub(start), lub^2(start), ..., lub^count(start)

    start is validated before the iterator is returned.

    Raises:
        InvalidInput: start breaks the rule of expansion
        ValueError: count is negative
    """
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    violation = validate(start, p)
    if violation is not None:
        raise InvalidInput(violation)
    return _iterate(start.digits, count, p)


def _iterate(digits: Tuple[int, ...], count: int, p: Params) -> Iterator[CoefficientSequence]:
    for _ in range(count):
        digits = _successor(digits, p)
        yield CoefficientSequence._trusted(digits)

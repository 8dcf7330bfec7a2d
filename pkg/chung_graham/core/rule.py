"""
Digit strings and the rule of expansion for an even interval d

Digit strings are little-endian: digits[0] is the coefficient of H_1. The
lexicographic order used throughout is dominated by the highest index, so it
agrees with the order of the represented integers on valid strings.
"""

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Tuple

from chung_graham.core.config import DIGIT_SEPARATOR
from chung_graham.core.errors import DigitParseError
from chung_graham.core.sequences import fibonacci, lucas_k, require_even_interval

_DIGIT_RE = re.compile(r"^[0-9]+$")


@dataclass(frozen=True)
class Params:
    """Interval d with its digit caps A = K_d - 1 (index >= 2) and B = F_{2+d} - 1 (index 1)"""

    d: int
    A: int
    B: int


@lru_cache(maxsize=None)
def params(d: int) -> Params:
    """Return the digit caps for the even interval d"""
    require_even_interval(d)
    return Params(d=d, A=lucas_k(d) - 1, B=fibonacci(2 + d) - 1)


@dataclass(frozen=True)
class CoefficientSequence:
    """
    Finite little-endian digit string (eps_1, ..., eps_l)

    Trailing zeros are trimmed on construction, so the zero integer is the
    empty tuple and equal strings compare equal as dataclasses.
    """

    digits: Tuple[int, ...] = ()

    def __post_init__(self):
        digits = tuple(self.digits)
        for digit in digits:
            if isinstance(digit, bool) or not isinstance(digit, int) or digit < 0:
                raise ValueError(f"digits must be non-negative integers, got {digit!r}")
        end = len(digits)
        while end and digits[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "digits", digits[:end])

    @classmethod
    def _trusted(cls, digits: Tuple[int, ...]) -> "CoefficientSequence":
        # Hot paths only: digits are non-negative ints with no trailing zero.
        obj = object.__new__(cls)
        object.__setattr__(obj, "digits", digits)
        return obj

    @classmethod
    def from_digits(cls, digits: Iterable[int]) -> "CoefficientSequence":
        return cls(tuple(digits))

    @classmethod
    def from_text(cls, text: str) -> "CoefficientSequence":
        """
        Parse the comma form, e.g. "6,5,6,0,5,6"; "" is zero

        Surrounding parentheses and whitespace are accepted.
        """
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1].strip()
        if not body:
            return cls()

        digits = []
        for position, piece in enumerate(body.split(DIGIT_SEPARATOR), start=1):
            piece = piece.strip()
            if not _DIGIT_RE.match(piece):
                raise DigitParseError(f"digit {position} is not a non-negative integer: {piece!r}")
            digits.append(int(piece))
        return cls(tuple(digits))

    def to_text(self) -> str:
        return DIGIT_SEPARATOR.join(str(digit) for digit in self.digits)

    def digit(self, k: int) -> int:
        """Return eps_k (1-based), zero beyond the stored digits"""
        if k < 1:
            raise ValueError(f"indices start at 1, got {k}")
        return self.digits[k - 1] if k <= len(self.digits) else 0

    @property
    def order(self) -> int:
        return len(self.digits) or 1

    @property
    def is_zero(self) -> bool:
        return not self.digits

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __str__(self) -> str:
        return f"({self.to_text() or '0'})"


ZERO = CoefficientSequence()


@dataclass(frozen=True)
class Violation:
    """Which item of the rule failed (1, 2 or 3) and the 1-based index witnessing it"""

    item: int
    index: int

    def __str__(self) -> str:
        return f"item {self.item} at index {self.index}"


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def order(eps: CoefficientSequence) -> int:
    """Largest index with a nonzero digit; 1 for the zero sequence"""
    return eps.order


def validate(eps: CoefficientSequence, p: Params) -> Optional[Violation]:
    """
    Check eps against the three items of the rule of expansion

    1. eps_1 <= B and eps_k <= A for k >= 2.
    2. If eps_m = A for some m >= 2 with eps_k = A-1 for all 2 <= k < m, then eps_1 < B.
    3. Two A's at indices 2 <= k < j need some eps_c <= A-2 with k < c < j.

    Args:
        eps: Digit string to check
        p: Digit caps for the interval

    Returns:
        None when eps is valid, otherwise the witness with the lowest index,
        ties going to the lower item number. Item 2 is witnessed at index 1,
        item 3 at the later of the two A's.
    """
    digits = eps.digits
    A, B = p.A, p.B
    witnesses = []

    for index, digit in enumerate(digits, start=1):
        if digit > (B if index == 1 else A):
            witnesses.append(Violation(item=1, index=index))
            break

    if digits and digits[0] == B:
        k = 1
        while k < len(digits) and digits[k] == A - 1:
            k += 1
        if k < len(digits) and digits[k] == A:
            witnesses.append(Violation(item=2, index=1))

    previous_a = False
    separated = False
    for index in range(2, len(digits) + 1):
        digit = digits[index - 1]
        if digit == A:
            if previous_a and not separated:
                witnesses.append(Violation(item=3, index=index))
                break
            previous_a = True
            separated = False
        elif digit <= A - 2:
            separated = True

    if not witnesses:
        return None
    return min(witnesses, key=lambda violation: (violation.index, violation.item))


def is_valid(eps: CoefficientSequence, p: Params) -> bool:
    return validate(eps, p) is None


def compare_lex(eps: CoefficientSequence, tau: CoefficientSequence) -> Ordering:
    """
    Compare two digit strings from the highest index downward

    This is not left-to-right tuple order: the digit with the largest index
    dominates.
    """
    left, right = eps.digits, tau.digits
    if len(left) != len(right):
        return Ordering.LESS if len(left) < len(right) else Ordering.GREATER
    for a, b in zip(reversed(left), reversed(right)):
        if a != b:
            return Ordering.LESS if a < b else Ordering.GREATER
    return Ordering.EQUAL


def lex_key(eps: CoefficientSequence) -> Tuple[int, Tuple[int, ...]]:
    """Sort key consistent with compare_lex"""
    return len(eps.digits), eps.digits[::-1]

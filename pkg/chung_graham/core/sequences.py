"""
Integer sequences behind the numeration system
Exact generators for the Fibonacci numbers F, the companion sequence K and the
base sequence H_k = F_{2+d(k-1)}, plus the identities they satisfy
"""

import bisect
import logging
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from chung_graham.core.errors import UnsupportedInterval

logger = logging.getLogger(__name__)


def require_even_interval(d: int) -> int:
    """
    Check that d is a positive even integer

    Args:
        d: Interval between the Fibonacci indices of consecutive base terms

    Returns:
        d unchanged

    Raises:
        UnsupportedInterval: d is odd, zero, negative or not an integer
    """
    if isinstance(d, bool) or not isinstance(d, int) or d < 2 or d % 2:
        raise UnsupportedInterval(d)
    return d


def _require_index(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"indices start at 1, got {k!r}")


def fibonacci(k: int) -> int:
    """Return F_k with (F_1, F_2) = (1, 1)"""
    _require_index(k)
    previous, current = 0, 1
    for _ in range(k - 1):
        previous, current = current, previous + current
    return current


def lucas_k(k: int) -> int:
    """Return K_k with (K_1, K_2) = (1, 3) and the Fibonacci recurrence"""
    _require_index(k)
    # K_0 = 2 keeps the loop identical to fibonacci()
    previous, current = 2, 1
    for _ in range(k - 1):
        previous, current = current, previous + current
    return current


class BaseSequence:
    """
    Grow-on-demand table of H_k = F_{2+d(k-1)} for one even interval d

    Terms follow H_{k+2} = K_d * H_{k+1} - H_k from the seeds H_1 = 1 and
    H_2 = F_{2+d}. The table only ever grows. Extensions are built aside and
    published by swapping a tuple reference, so readers never see a partial
    prefix.
    """

    def __init__(self, d: int):
        self.d = require_even_interval(d)
        self.k_d = lucas_k(d)
        self._terms: Tuple[int, ...] = (1, fibonacci(2 + d))
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, k: int) -> int:
        _require_index(k)
        self.extend_to(k)
        return self._terms[k - 1]

    def extend_to(self, k: int) -> None:
        """Make sure H_1..H_k are populated"""
        if len(self._terms) >= k:
            return
        with self._lock:
            terms = list(self._terms)
            if len(terms) >= k:
                return
            while len(terms) < k:
                terms.append(self.k_d * terms[-1] - terms[-2])
            self._terms = tuple(terms)
        logger.debug("d=%d: base table grown to %d terms", self.d, k)

    def prefix(self, k: int) -> Tuple[int, ...]:
        """Return (H_1, ..., H_k)"""
        if k <= 0:
            return ()
        self.extend_to(k)
        return self._terms[:k]

    def index_at_most(self, n: int) -> int:
        """
        Return the largest index l with H_l <= n

        Args:
            n: Positive integer

        Returns:
            1-based index into the base sequence
        """
        if n < 1:
            raise ValueError(f"no base term is <= {n}")
        while self._terms[-1] <= n:
            self.extend_to(2 * len(self._terms))
        return bisect.bisect_right(self._terms, n)


@lru_cache(maxsize=None)
def base_sequence(d: int) -> BaseSequence:
    """Return the shared memo table for interval d"""
    return BaseSequence(d)


def base_term(d: int, k: int) -> int:
    """Return H_k = F_{2+d(k-1)} for the even interval d"""
    require_even_interval(d)
    return base_sequence(d)[k]


def check_norm_identity(d: int) -> bool:
    """Return True iff K_d^2 - 5 F_d^2 = 4 (-1)^d"""
    _require_index(d)
    return lucas_k(d) ** 2 - 5 * fibonacci(d) ** 2 == 4 * (-1) ** d


def alpha(decimal_digits: int) -> str:
    """
    Return (1 + sum_{k>=1} 1/F_{2k})^{-1} rounded to the given number of decimals

    The partial sum is exact. Summation stops at the first term below
    10^-(decimal_digits+2); the terms shrink geometrically (ratio about 0.38),
    so the dropped tail stays below twice that cutoff.

    Args:
        decimal_digits: Number of digits after the decimal point

    Returns:
        Decimal string such as "0.39441967"
    """
    _require_index(decimal_digits)
    cutoff = Fraction(1, 10 ** (decimal_digits + 2))
    # F_{2k} is H_k for d = 2
    even_fibonacci = base_sequence(2)

    total = Fraction(1)
    k = 1
    while True:
        term = Fraction(1, even_fibonacci[k])
        if term < cutoff:
            break
        total += term
        k += 1

    scale = 10**decimal_digits
    scaled = round(scale / total)
    whole, fraction = divmod(scaled, scale)
    return f"{whole}.{fraction:0{decimal_digits}d}"

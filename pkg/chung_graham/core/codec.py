"""
Greedy encoding, decoding and the maximal digit strings beta(n)
"""

from functools import lru_cache

from chung_graham.core.rule import CoefficientSequence, Params, params
from chung_graham.core.sequences import base_sequence


@lru_cache(maxsize=1024)
def beta(n: int, p: Params) -> CoefficientSequence:
    """
    Return the maximal digit string of order n

    beta(1) = (B), beta(2) = (B-1, A) and beta(n) = (B-1, A-1, ..., A-1, A)
    with n entries. It is the lex-greatest valid string of order <= n and
    1 + decode(beta(n)) = H_{n+1}.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")
    if n == 1:
        return CoefficientSequence((p.B,))
    return CoefficientSequence((p.B - 1,) + (p.A - 1,) * (n - 2) + (p.A,))


def is_maximal(eps: CoefficientSequence, p: Params) -> bool:
    """True iff eps equals beta(n) for some n"""
    return not eps.is_zero and eps == beta(eps.order, p)


def decode(eps: CoefficientSequence, d: int) -> int:
    """Return sum_k eps_k * H_k; validity is not required"""
    terms = base_sequence(d).prefix(len(eps.digits))
    return sum(digit * term for digit, term in zip(eps.digits, terms))


def encode(n: int, d: int) -> CoefficientSequence:
    """
    Return the unique valid digit string whose value is n

    Works from the top index down. While the remainder exceeds B, take the
    largest l with H_l <= remainder and the largest multiple a of H_l that
    fits (a <= A). When a = A the top is extended downward with the longest
    run of A-1's that still fits; the digit below the run is then at most
    A-2, or the run reaches index 2 and the leftover (< B) lands on index 1.

    Args:
        n: Non-negative integer of any size
        d: Even interval

    Returns:
        Trimmed CoefficientSequence; the zero sequence for n = 0
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"only non-negative integers can be encoded, got {n!r}")
    p = params(d)
    table = base_sequence(d)
    A, B = p.A, p.B

    if n <= B:
        return CoefficientSequence((n,))

    top = table.index_at_most(n)
    digits = [0] * top
    remainder = n

    while remainder > B:
        ell = table.index_at_most(remainder)
        a = remainder // table[ell]

        if a <= A - 1:
            digits[ell - 1] = a
            remainder -= a * table[ell]
            continue

        digits[ell - 1] = A
        remainder -= A * table[ell]
        if ell == 2:
            break

        # Extend the run of A-1 below the A while it fits, never past index 2.
        low = ell
        while low > 2 and (A - 1) * table[low - 1] <= remainder:
            low -= 1
            digits[low - 1] = A - 1
            remainder -= (A - 1) * table[low]
        if low == 2:
            break

        below = low - 1
        b = remainder // table[below]
        digits[below - 1] = b
        remainder -= b * table[below]

    # Every branch above leaves a remainder that is a valid first digit.
    digits[0] = remainder
    return CoefficientSequence(tuple(digits))

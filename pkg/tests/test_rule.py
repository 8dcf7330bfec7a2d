import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chung_graham.core.codec import encode
from chung_graham.core.errors import DigitParseError, UnsupportedInterval
from chung_graham.core.rule import (
    ZERO,
    CoefficientSequence,
    Ordering,
    Violation,
    compare_lex,
    is_valid,
    lex_key,
    order,
    params,
    validate,
)


def seq(*digits):
    return CoefficientSequence(tuple(digits))


digit_strings = st.lists(st.integers(min_value=0, max_value=9), max_size=8).map(
    lambda digits: CoefficientSequence(tuple(digits))
)


@pytest.mark.parametrize("d, A, B", [(2, 2, 2), (4, 6, 7), (6, 17, 20)])
def test_params(d, A, B):
    p = params(d)
    assert (p.d, p.A, p.B) == (d, A, B)


def test_caps_coincide_only_for_d_2():
    for d in range(2, 31, 2):
        p = params(d)
        assert p.A <= p.B
        assert (p.A == p.B) == (d == 2)


@pytest.mark.parametrize("d", [3, 0, -4])
def test_params_rejects_bad_interval(d):
    with pytest.raises(UnsupportedInterval) as excinfo:
        params(d)
    assert excinfo.value.d == d


def test_trailing_zeros_are_trimmed():
    assert seq(1, 0, 0) == seq(1)
    assert seq(0, 0) == ZERO
    assert ZERO.is_zero


@pytest.mark.parametrize("bad", [(-1,), (1, True), (1, 2.0)])
def test_digits_must_be_non_negative_ints(bad):
    with pytest.raises(ValueError):
        CoefficientSequence(bad)


@pytest.mark.parametrize("eps, expected", [(ZERO, 1), (seq(6, 5, 6), 3), (seq(1, 0, 0, 2), 4)])
def test_order(eps, expected):
    assert order(eps) == expected


def test_digit_lookup():
    eps = seq(6, 5, 6)
    assert eps.digit(1) == 6
    assert eps.digit(2) == 5
    assert eps.digit(10) == 0
    with pytest.raises(ValueError):
        eps.digit(0)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("6,5,6", seq(6, 5, 6)),
        ("(6, 5, 6)", seq(6, 5, 6)),
        ("", ZERO),
        ("  ", ZERO),
        ("()", ZERO),
        ("1,0,0", seq(1)),
        ("0,0,0,1,5,6", seq(0, 0, 0, 1, 5, 6)),
    ],
)
def test_from_text(text, expected):
    assert CoefficientSequence.from_text(text) == expected


@pytest.mark.parametrize("text", ["6,x", "6,,5", "-1", "1.5", "6;5"])
def test_from_text_rejects_garbage(text):
    with pytest.raises(DigitParseError):
        CoefficientSequence.from_text(text)


def test_text_forms():
    assert seq(0, 0, 0, 1, 5, 6).to_text() == "0,0,0,1,5,6"
    assert ZERO.to_text() == ""
    assert str(seq(6, 5, 6)) == "(6,5,6)"
    assert str(ZERO) == "(0)"


@given(digit_strings)
def test_text_round_trip(eps):
    assert CoefficientSequence.from_text(eps.to_text()) == eps


@pytest.mark.parametrize(
    "digits",
    [
        (6, 5, 5, 5, 6, 0, 2, 5, 6),
        (7, 4, 5, 5, 6, 5, 5),
        (6, 6, 3, 5, 5, 0, 4),
    ],
)
def test_known_valid_strings(p4, digits):
    assert validate(seq(*digits), p4) is None


def test_repeated_a_without_separator(p4):
    violation = validate(seq(6, 4, 5, 6, 5, 5, 6), p4)
    assert violation == Violation(item=3, index=7)
    assert str(violation) == "item 3 at index 7"


def test_run_reaching_first_digit_at_cap(p2):
    assert validate(seq(2, 1, 1, 1, 2), p2) == Violation(item=2, index=1)
    assert validate(seq(1, 1, 1, 1, 2), p2) is None


@pytest.mark.parametrize(
    "digits, expected",
    [
        ((8,), Violation(1, 1)),
        ((7, 7), Violation(1, 2)),
        ((0, 7, 9), Violation(1, 2)),
        ((7, 6), Violation(2, 1)),
        ((7, 5, 5, 6), Violation(2, 1)),
        ((0, 6, 6), Violation(3, 3)),
        ((0, 6, 5, 6), Violation(3, 4)),
        # The lowest index wins across items
        ((7, 6, 7), Violation(2, 1)),
        ((7, 6, 6), Violation(2, 1)),
        ((0, 6, 6, 7), Violation(3, 3)),
        ((0, 7, 6, 6), Violation(1, 2)),
        ((0, 6, 6, 8), Violation(3, 3)),
    ],
)
def test_violations(p4, digits, expected):
    assert validate(seq(*digits), p4) == expected


@pytest.mark.parametrize("digits", [(), (7,), (7, 5, 4, 6), (0, 6, 4, 6), (6, 6), (7, 5)])
def test_valid_edge_strings(p4, digits):
    assert is_valid(seq(*digits), p4)


@pytest.mark.parametrize(
    "left, right, expected",
    [
        (seq(2), seq(0, 1), Ordering.LESS),
        (seq(6, 5, 6, 0, 5, 6), seq(0, 0, 0, 1, 5, 6), Ordering.LESS),
        (seq(0, 0, 0, 1, 5, 6), seq(6, 5, 6, 0, 5, 6), Ordering.GREATER),
        (seq(6, 5, 6), seq(6, 5, 6), Ordering.EQUAL),
        (ZERO, ZERO, Ordering.EQUAL),
        (ZERO, seq(1), Ordering.LESS),
    ],
)
def test_compare_lex(left, right, expected):
    assert compare_lex(left, right) == expected


@given(digit_strings, digit_strings)
def test_compare_lex_is_antisymmetric_and_matches_sort_key(left, right):
    assert compare_lex(left, right) == -compare_lex(right, left)
    key_order = (lex_key(left) > lex_key(right)) - (lex_key(left) < lex_key(right))
    assert compare_lex(left, right) == key_order


@given(d=st.sampled_from([2, 4, 6]), n=st.integers(min_value=0, max_value=10**12))
def test_truncations_of_valid_strings_are_valid(d, n):
    p = params(d)
    digits = encode(n, d).digits
    for cut in range(len(digits) + 1):
        assert is_valid(CoefficientSequence(digits[:cut]), p)


@given(d=st.sampled_from([2, 4, 6]), n=st.integers(min_value=0, max_value=10**12), data=st.data())
def test_appending_a_small_digit_stays_valid(d, n, data):
    p = params(d)
    eps = encode(n, d)
    c = data.draw(st.integers(min_value=0, max_value=p.A - 1))
    padded = eps.digits or (0,)
    assert is_valid(CoefficientSequence(padded + (c,)), p)


def _earliest_witness(digits, p):
    # Direct reading of the three items, every pair of A's considered
    witnesses = []
    for index, digit in enumerate(digits, start=1):
        if digit > (p.B if index == 1 else p.A):
            witnesses.append((index, 1))
    for m in range(2, len(digits) + 1):
        if digits[m - 1] == p.A and all(digits[k - 1] == p.A - 1 for k in range(2, m)) and digits[0] == p.B:
            witnesses.append((1, 2))
    a_positions = [k for k in range(2, len(digits) + 1) if digits[k - 1] == p.A]
    for k, j in itertools.combinations(a_positions, 2):
        if not any(digits[c - 1] <= p.A - 2 for c in range(k + 1, j)):
            witnesses.append((j, 3))
    if not witnesses:
        return None
    index, item = min(witnesses)
    return Violation(item=item, index=index)


def test_witness_is_the_lowest_index_across_items(p4):
    for digits in itertools.product(range(9), repeat=4):
        assert validate(CoefficientSequence(digits), p4) == _earliest_witness(digits, p4), digits


def test_from_digits_accepts_any_iterable():
    assert CoefficientSequence.from_digits(iter([6, 5, 6, 0])) == seq(6, 5, 6)
    assert CoefficientSequence.from_digits(range(0)) == ZERO

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regdiv.errors import ResourceLimitError
from regdiv.pairtree import pair_at_index
from regdiv.sequence import (
    SequenceEvaluator,
    cantor,
    iter_rows,
    iter_values,
    row_of_index,
    row_values,
    s_eval,
    s_range,
    v2,
)

FIRST_15 = [0, 1, 1, 2, 3, 3, 2, 3, 7, 8, 5, 5, 8, 7, 3]


def s_reference(n):
    # direct transcription of the defining recursions, no memoization
    if n <= 3:
        return (0, 1, 1)[n - 1]
    k, r = divmod(n, 4)
    if r == 0:
        return 2 * s_reference(2 * k) - s_reference(k)
    if r == 1:
        return 2 * s_reference(2 * k) + s_reference(2 * k + 1)
    if r == 2:
        return 2 * s_reference(2 * k + 1) + s_reference(2 * k)
    return 2 * s_reference(2 * k + 1) - s_reference(k)


def test_first_terms():
    assert s_range(7) == [0, 1, 1, 2, 3, 3, 2]


def test_single_term():
    assert s_range(1) == [0]


def test_first_four_rows():
    assert s_range(15) == FIRST_15


@pytest.mark.parametrize(
    "n,expected",
    [(1, 0), (2, 1), (3, 1), (4, 2), (5, 3), (6, 3), (7, 2), (20, 13)],
)
def test_eval_small(n, expected):
    assert s_eval(n) == expected


def test_eval_matches_reference_recursion():
    ev = SequenceEvaluator()
    for n in range(1, 513):
        assert ev[n] == s_reference(n)


def test_row_endpoints_are_row_number():
    assert s_eval(2**10) == 10
    assert s_eval(2**11 - 1) == 10


def test_eval_handles_huge_indices():
    # dependency chain is thousands of frames deep; must not hit the
    # interpreter recursion limit
    n = (1 << 5000) + 12345
    ev = SequenceEvaluator(cache_limit=1 << 16)
    assert ev[n] >= 5000  # row lower bound


def test_eval_agrees_with_range_prefix():
    prefix = s_range(1 << 14)
    ev = SequenceEvaluator()
    for n in range(1, (1 << 14) + 1):
        assert ev[n] == prefix[n - 1]


def test_eval_agrees_with_range_sampled_to_2_20():
    prefix = s_range(1 << 20)
    rng = random.Random(20260810)
    ev = SequenceEvaluator()
    for n in rng.sample(range(1 << 14, (1 << 20) + 1), 512):
        assert ev[n] == prefix[n - 1]


@given(st.integers(min_value=1, max_value=1 << 64))
@settings(max_examples=200)
def test_eval_agrees_with_tree_walk(n):
    # fully independent route: second component of the pair at index n
    assert s_eval(n) == pair_at_index(n).m


def test_row_values_examples():
    assert row_values(0) == [0]
    assert row_values(2) == [2, 3, 3, 2]
    assert row_values(3) == [3, 7, 8, 5, 5, 8, 7, 3]


def test_row_properties_to_16():
    for k, row in enumerate(iter_rows()):
        if k > 16:
            break
        assert len(row) == 1 << k
        assert row == row[::-1]  # palindrome under reflection
        assert row[0] == row[-1] == k
        assert min(row) == k


def test_iter_values_matches_rows():
    flat = []
    for k, row in enumerate(iter_rows()):
        if k > 6:
            break
        flat.extend(row)
    from itertools import islice

    assert list(islice(iter_values(), len(flat))) == flat


def test_row_of_index():
    assert row_of_index(1) == 0
    assert row_of_index(2) == 1
    assert row_of_index(3) == 1
    assert row_of_index(1 << 10) == 10
    assert row_of_index((1 << 11) - 1) == 10


def test_argument_validation():
    with pytest.raises(ValueError):
        s_range(0)
    with pytest.raises(ValueError):
        s_eval(0)
    with pytest.raises(ValueError):
        row_values(-1)
    with pytest.raises(ValueError):
        row_of_index(0)


def test_resource_limits():
    with pytest.raises(ResourceLimitError):
        s_range(101, max_count=100)
    with pytest.raises(ResourceLimitError):
        row_values(25)


def test_cache_cap_resets_cache():
    ev = SequenceEvaluator(cache_limit=16)
    assert ev[10**6] == s_eval(10**6)
    # the evaluation needed more than 16 entries, so the cache was dropped
    assert ev.cache_size == 3
    with pytest.raises(ValueError):
        SequenceEvaluator(cache_limit=4)


def test_v2_examples():
    assert v2(1) == 0
    assert v2(8) == 3
    assert v2(12) == 2


@given(st.integers(min_value=1, max_value=10**9))
def test_v2_recursion_properties(n):
    assert v2(2 * n) == v2(n) + 1
    assert v2(2 * n + 1) == 0


def test_v2_against_power_divisibility():
    for n in range(1, 2001):
        e = v2(n)
        assert n % 2**e == 0 and n % 2 ** (e + 1) != 0


def test_cantor_examples():
    assert cantor(1) == 0
    assert cantor(2) == 2
    assert cantor(4) == 8


def test_cantor_digits_and_monotonicity():
    prev = -1
    for n in range(1, 2001):
        c = cantor(n)
        t = c
        while t:
            t, digit = divmod(t, 3)
            assert digit in (0, 2)
        assert c > prev
        prev = c


def test_cantor_closed_form():
    # binary digits of n-1, read in base 3 and doubled
    for n in range(1, 2001):
        assert cantor(n) == 2 * int(bin(n - 1)[2:], 3)


def test_demo_sequence_validation():
    with pytest.raises(ValueError):
        v2(0)
    with pytest.raises(ValueError):
        cantor(0)

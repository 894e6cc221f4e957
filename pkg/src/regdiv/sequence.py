"""Evaluators for the divisor-counting sequence s(n), plus two demo sequences.

s(n) is defined on 1-based indices by the residue recursions

    s(4k)   = 2*s(2k)   - s(k)
    s(4k+1) = 2*s(2k)   + s(2k+1)
    s(4k+2) = 2*s(2k+1) + s(2k)
    s(4k+3) = 2*s(2k+1) - s(k)

with s(1) = 0, s(2) = 1, s(3) = 1.  Laid out as a binary tree, row k of
the sequence occupies indices [2**k, 2**(k+1) - 1].

Two evaluation strategies are provided: `SequenceEvaluator` memoizes the
top-down recursion and only ever touches O(log n) indices, so it handles
indices with thousands of bits; `iter_rows`/`iter_values`/`s_range` build
rows bottom-up from the previous two rows, which is the fast path for
long prefixes.
"""

from __future__ import annotations

from itertools import islice
from typing import Iterator

from .errors import ResourceLimitError

DEFAULT_MAX_COUNT = 1 << 24
DEFAULT_MAX_ROW = 24
DEFAULT_CACHE_LIMIT = 1 << 20

_BASE = {1: 0, 2: 1, 3: 1}


def row_of_index(n: int) -> int:
    """Row containing index n, i.e. floor(log2(n))."""
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    return n.bit_length() - 1


class SequenceEvaluator:
    """Memoized top-down evaluation of s(n), indexed like a sequence.

    >>> SequenceEvaluator()[20]
    13

    An instance owns a private cache and is not thread-safe; use one
    instance per thread.  `cache_limit` bounds the cache size: when an
    evaluation pushes the cache past the limit, the cache is dropped back
    to the initial conditions (each evaluation only needs O(log n)
    entries, so this only costs re-derivation, never correctness).
    """

    def __init__(self, cache_limit: int = DEFAULT_CACHE_LIMIT):
        if cache_limit < 8:
            raise ValueError(f"cache_limit must be >= 8, got {cache_limit}")
        self.cache_limit = cache_limit
        self._memo: dict[int, int] = dict(_BASE)

    @property
    def cache_size(self) -> int:
        return len(self._memo)

    def __getitem__(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"sequence index must be >= 1, got {n}")
        memo = self._memo
        if n in memo:
            return memo[n]
        self._fill(n)
        value = memo[n]
        if len(memo) > self.cache_limit:
            self._memo = dict(_BASE)
        return value

    def _fill(self, n: int) -> None:
        # Explicit stack: the dependency chain is as deep as n.bit_length(),
        # which can exceed the interpreter recursion limit for huge n.
        memo = self._memo
        stack = [n]
        while stack:
            t = stack[-1]
            if t in memo:
                stack.pop()
                continue
            k, r = divmod(t, 4)
            if r == 0:
                deps = (2 * k, k)
            elif r == 3:
                deps = (2 * k + 1, k)
            else:
                deps = (2 * k, 2 * k + 1)
            missing = [d for d in deps if d not in memo]
            if missing:
                stack.extend(missing)
                continue
            stack.pop()
            if r == 0:
                memo[t] = 2 * memo[2 * k] - memo[k]
            elif r == 1:
                memo[t] = 2 * memo[2 * k] + memo[2 * k + 1]
            elif r == 2:
                memo[t] = 2 * memo[2 * k + 1] + memo[2 * k]
            else:
                memo[t] = 2 * memo[2 * k + 1] - memo[k]


def s_eval(n: int) -> int:
    """s(n) via a transient top-down evaluator; fine for isolated huge n."""
    return SequenceEvaluator()[n]


def iter_rows() -> Iterator[list[int]]:
    """Yield the rows [s(2**k), ..., s(2**(k+1) - 1)] for k = 0, 1, 2, ...

    Only the previous two rows are retained, so arbitrarily long prefixes
    stream in memory proportional to the last row.
    """
    prev2 = [0]
    prev1 = [1, 1]
    yield prev2
    yield prev1
    while True:
        row: list[int] = []
        append = row.append
        # children of s(k): the four values s(4k), ..., s(4k+3) sit under
        # the adjacent pair (s(2k), s(2k+1)) of the previous row
        for a, b, c in zip(prev1[0::2], prev1[1::2], prev2):
            ta = a + a
            tb = b + b
            append(ta - c)
            append(ta + b)
            append(tb + a)
            append(tb - c)
        yield row
        prev2, prev1 = prev1, row


def iter_values() -> Iterator[int]:
    """Yield s(1), s(2), s(3), ... without end."""
    for row in iter_rows():
        yield from row


def s_range(count: int, *, max_count: int = DEFAULT_MAX_COUNT) -> list[int]:
    """The list [s(1), ..., s(count)], computed bottom-up."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if count > max_count:
        raise ResourceLimitError(f"count {count} exceeds the cap {max_count}")
    return list(islice(iter_values(), count))


def row_values(k: int, *, max_row: int = DEFAULT_MAX_ROW) -> list[int]:
    """Row k of the value tree: the 2**k values s(2**k) .. s(2**(k+1)-1)."""
    if k < 0:
        raise ValueError(f"row must be >= 0, got {k}")
    if k > max_row:
        raise ResourceLimitError(f"row {k} exceeds the cap {max_row}")
    for depth, row in enumerate(iter_rows()):
        if depth == k:
            return row
    raise AssertionError("unreachable")


def v2(n: int) -> int:
    """2-adic valuation: the largest e such that 2**e divides n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    e = 0
    while n % 2 == 0:  # v2(2k) = v2(k) + 1; v2(odd) = 0
        n //= 2
        e += 1
    return e


def cantor(n: int) -> int:
    """n-th nonnegative integer whose ternary expansion has no digit 1.

    Defined for n >= 1 by c(1) = 0, c(2k) = 3*c(k) + 2, c(2k+1) = 3*c(k+1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    memo = {1: 0}
    stack = [n]
    while stack:
        t = stack[-1]
        if t in memo:
            stack.pop()
            continue
        k, r = divmod(t, 2)
        dep = k + r  # c(2k) needs c(k); c(2k+1) needs c(k+1)
        if dep in memo:
            memo[t] = 3 * memo[dep] + (2 if r == 0 else 0)
            stack.pop()
        else:
            stack.append(dep)
    return memo[n]

"""Quantitative checks tying the sequence, the pair tree, and tau together.

The central fact: the number of indices n with s(n) = m equals
tau(m*m + 1).  Everything here either verifies such an identity
mechanically (occurrence counts against divisor counts, row sums against
their linear recurrence, enumerated row maxima against zigzag paths) or
exposes the quantity itself for reporting.

Occurrence scans rely on values never dipping below their row number, so
all occurrences of m sit at indices below 2**(m+1); the scans assert
this bound as they go.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from . import pairtree
from .divisors import DEFAULT_BUDGET, divisors, tau_m2p1
from .errors import ConsistencyError, ResourceLimitError
from .pairtree import ROOT, Pair
from .sequence import SequenceEvaluator, iter_rows, row_values

DEFAULT_MAX_M = 22
DEFAULT_DIRECT_ROWS = 20


@dataclass(frozen=True)
class OccurrenceRecord:
    """Where the value m occurs: indices n with s(n) = m, plus tau(m*m + 1)."""

    m: int
    indices: tuple[int, ...]
    tau_value: int

    @property
    def count(self) -> int:
        return len(self.indices)

    @property
    def passed(self) -> bool:
        return self.count == self.tau_value

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "tau": self.tau_value,
            "count": self.count,
            "indices": list(self.indices),
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Occurrence count vs. tau comparison for every m up to max_m."""

    max_m: int
    records: tuple[OccurrenceRecord, ...]
    all_pass: bool

    def as_dict(self) -> dict:
        return {
            "max_m": self.max_m,
            "records": [r.as_dict() for r in self.records],
            "all_pass": self.all_pass,
        }

    def to_json(self, *, indent: int | None = 2) -> str:
        return json.dumps(self.as_dict(), indent=indent)


def _tally(max_m: int, cap: int) -> list[list[int]]:
    # One streaming pass over n < 2**(max_m + 1), collecting the indices of
    # every value <= max_m.
    if max_m < 0:
        raise ValueError(f"max_m must be >= 0, got {max_m}")
    if max_m > cap:
        raise ResourceLimitError(f"max_m {max_m} exceeds the cap {cap}")
    limit = 1 << (max_m + 1)
    hits: list[list[int]] = [[] for _ in range(max_m + 1)]
    n = 1
    for k, row in enumerate(iter_rows()):
        for v in row:
            if v < k:
                raise ConsistencyError(f"s({n}) = {v} on row {k} breaks the row lower bound")
            if v <= max_m:
                hits[v].append(n)
            n += 1
        if n >= limit:
            return hits
    raise AssertionError("unreachable")


def occurrences_brute(m: int, *, max_m: int = DEFAULT_MAX_M) -> OccurrenceRecord:
    """Indices with s(n) = m, found by scanning every n < 2**(m+1)."""
    hits = _tally(m, max_m)
    return OccurrenceRecord(m, tuple(hits[m]), tau_m2p1(m))


def indices_of(m: int, *, budget: int = DEFAULT_BUDGET) -> OccurrenceRecord:
    """Indices with s(n) = m, constructed from the divisors of m*m + 1.

    Each divisor d yields the tree pair (d, m), whose root path encodes
    one index.  Entirely independent of the brute scan; the two must
    agree wherever both run.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    ds = divisors(m * m + 1, budget=budget)
    idx = sorted(pairtree.index_of_pair(Pair(d, m)) for d in ds)
    return OccurrenceRecord(m, tuple(idx), len(ds))


def verify_theorem(max_m: int, *, cap: int = DEFAULT_MAX_M) -> VerificationReport:
    """Tally every value <= max_m over n < 2**(max_m+1) and compare with tau."""
    hits = _tally(max_m, cap)
    records = tuple(
        OccurrenceRecord(m, tuple(hits[m]), tau_m2p1(m)) for m in range(max_m + 1)
    )
    return VerificationReport(max_m, records, all(r.passed for r in records))


def gf_coefficients(max_m: int, *, cap: int = DEFAULT_MAX_M) -> list[int]:
    """Occurrence counts of 0..max_m, i.e. the coefficients of the series
    counted from the sequence side."""
    return [len(h) for h in _tally(max_m, cap)]


def _row_sums_recurrence(max_k: int) -> list[int]:
    # r(k) = 5*r(k-1) - 2*r(k-2), r(0) = 0, r(1) = 2
    sums = [0, 2]
    while len(sums) <= max_k:
        sums.append(5 * sums[-1] - 2 * sums[-2])
    return sums[: max_k + 1]


def row_sums(max_k: int, *, direct_rows: int = DEFAULT_DIRECT_ROWS) -> list[int]:
    """[r_0, ..., r_max_k] from the recurrence, with rows up to
    min(max_k, direct_rows) also summed directly as a cross-check."""
    if max_k < 0:
        raise ValueError(f"max_k must be >= 0, got {max_k}")
    sums = _row_sums_recurrence(max_k)
    rows = iter_rows()
    for k in range(min(max_k, direct_rows) + 1):
        direct = sum(next(rows))
        if direct != sums[k]:
            raise ConsistencyError(
                f"row {k} sums to {direct} directly, recurrence gives {sums[k]}"
            )
    return sums


def row_sum(k: int, *, direct_rows: int = DEFAULT_DIRECT_ROWS) -> int:
    """Exact sum of row k (direct summation cross-checks the recurrence)."""
    return row_sums(k, direct_rows=direct_rows)[k]


def row_average_exact(k: int) -> Fraction:
    """Row-k average as an exact rational, row_sum(k) / 2**k."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return Fraction(_row_sums_recurrence(k)[k], 1 << k)


def row_average_closed_form(k: int) -> Decimal:
    """Row-k average from the closed form

        ((5 + sqrt17)**k - (5 - sqrt17)**k) / (2**(2k-1) * sqrt17)

    evaluated in decimal floating point with precision scaled to k, so it
    matches row_average_exact(k) to well below 1e-9 relative error.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    with localcontext() as ctx:
        ctx.prec = 2 * k + 40  # digits; ample headroom over what the growth needs
        rt = Decimal(17).sqrt()
        hi = (5 + rt) ** k
        lo = (5 - rt) ** k
        return (hi - lo) / ((Decimal(2) ** (2 * k - 1)) * rt)


def row_max_zigzag(k: int) -> int:
    """Value after k alternating child steps R, L, R, L, ... from the root.

    This path (or its mirror L, R, L, R, ..., which reaches the reflected
    pair with the same value) attains the maximum of row k.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    p = ROOT
    for i in range(k):
        p = pairtree.right_child(p) if i % 2 == 0 else pairtree.left_child(p)
    return p.m


def row_max(k: int, *, direct_rows: int = DEFAULT_DIRECT_ROWS) -> int:
    """Largest value on row k (k >= 1).

    Computed from the zigzag path; for k <= direct_rows the row is also
    enumerated and the maximum compared.
    """
    z = row_max_zigzag(k)
    if k <= direct_rows:
        mx = max(row_values(k))
        if mx != z:
            raise ConsistencyError(f"row {k} max is {mx}, zigzag path gives {z}")
    return z


def row_maxes(max_k: int, *, direct_rows: int = DEFAULT_DIRECT_ROWS) -> list[int]:
    """[max of row 1, ..., max of row max_k] in a single enumeration pass."""
    if max_k < 1:
        raise ValueError(f"max_k must be >= 1, got {max_k}")
    out = []
    rows = iter_rows()
    next(rows)  # row 0
    for k in range(1, max_k + 1):
        z = row_max_zigzag(k)
        if k <= direct_rows:
            mx = max(next(rows))
            if mx != z:
                raise ConsistencyError(f"row {k} max is {mx}, zigzag path gives {z}")
        out.append(z)
    return out


def fib(n: int) -> int:
    """Fibonacci number under the indexing F(1) = 0, F(2) = 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a, b = 0, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def fib_path_index(n: int) -> int:
    """Index a(n) of the tree walk whose values run over the Fibonacci numbers.

    a(1) = 1, then a(n) = 2*a(n-1) when n % 4 == 0, a(n-1) + 1 when 1,
    2*a(n-1) + 1 when 2, and a(n-1) - 1 when 3.  Roughly doubles every
    other step, so a(n) quickly leaves any enumerable range.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a = 1
    for i in range(2, n + 1):
        r = i % 4
        if r == 0:
            a = 2 * a
        elif r == 1:
            a = a + 1
        elif r == 2:
            a = 2 * a + 1
        else:
            a = a - 1
    return a


def fib_path_check(max_n: int) -> bool:
    """True iff s(a(n)) = F(n) for all 1 <= n <= max_n."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    ev = SequenceEvaluator()
    a = 1
    f, g = 0, 1
    for n in range(1, max_n + 1):
        if ev[a] != f:
            return False
        r = (n + 1) % 4
        if r == 0:
            a = 2 * a
        elif r == 1:
            a = a + 1
        elif r == 2:
            a = 2 * a + 1
        else:
            a = a - 1
        f, g = g, f + g
    return True


def fib_square_factorization(n: int) -> tuple[int, int]:
    """Factor F(n)**2 + 1 as a product of two Fibonacci numbers.

    Under the F(1) = 0 indexing: odd n gives F(n-1) * F(n+1), even n
    gives F(n-2) * F(n+2).  Both factors exceed 1 exactly when n > 4,
    which exhibits F(n)**2 + 1 as composite there.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if n % 2:
        return fib(n - 1), fib(n + 1)
    return fib(n - 2), fib(n + 2)


def prime_criterion(n: int, *, max_m: int = DEFAULT_MAX_M) -> bool:
    """True iff the occurrences of n are exactly {2**n, 2**(n+1) - 1}.

    Equivalent to n*n + 1 being prime.  n = 0 yields False: the value 0
    occurs once (tau(1) = 1), not at two distinct indices.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    rec = occurrences_brute(n, max_m=max_m)
    return list(rec.indices) == [1 << n, (1 << (n + 1)) - 1]

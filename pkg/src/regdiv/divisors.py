"""Trial-division facts: divisor lists, tau, primality.

This is the elementary ground truth the rest of the package is checked
against, so it deliberately stays naive: divisors come straight from
trial division up to sqrt(n), bounded by an iteration budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import DivisorBudgetError

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class DivisorList:
    """All positive divisors of `target`, strictly increasing."""

    target: int
    divisors: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.divisors)

    def __iter__(self):
        return iter(self.divisors)

    def __getitem__(self, i):
        return self.divisors[i]

    def __contains__(self, x) -> bool:
        return x in self.divisors


def divisors(n: int, *, budget: int = DEFAULT_BUDGET) -> DivisorList:
    """Every positive divisor of n, by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    root = isqrt(n)
    if root > budget:
        raise DivisorBudgetError(
            f"divisor scan of {n} needs {root} iterations, budget is {budget}"
        )
    small = []
    large = []
    for d in range(1, root + 1):
        if n % d == 0:
            small.append(d)
            q = n // d
            if q != d:
                large.append(q)
    large.reverse()
    return DivisorList(n, tuple(small + large))


def tau(n: int, *, budget: int = DEFAULT_BUDGET) -> int:
    """Number of positive divisors of n."""
    return len(divisors(n, budget=budget))


def is_prime(n: int, *, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff n has exactly two divisors."""
    return n > 1 and tau(n, budget=budget) == 2


def tau_m2p1(m: int, *, budget: int = DEFAULT_BUDGET) -> int:
    """tau(m*m + 1) for m >= 0."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return tau(m * m + 1, budget=budget)

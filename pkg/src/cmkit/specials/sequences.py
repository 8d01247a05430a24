"""Exact Bernoulli and Euler number tables.

Both tables are built once from their defining recurrences with exact
rational / integer arithmetic and then shared read-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import DomainError


@dataclass(frozen=True)
class BernoulliTable:
    """Bernoulli numbers B_0 .. B_{2K} as exact rationals (B_1 = -1/2)."""

    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max_index(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class EulerTable:
    """Euler numbers E_0 .. E_{2K} as exact integers (odd entries zero)."""

    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max_index(self) -> int:
        return len(self.values) - 1


@lru_cache(maxsize=None)
def bernoulli_numbers(K: int) -> BernoulliTable:
    """Table of B_0 .. B_{2K} from sum_{j=0}^{n} C(n+1, j) B_j = 0.

    Exact Fraction arithmetic throughout; Python integers never overflow.
    """
    if K < 1:
        raise DomainError(f"bernoulli_numbers requires K >= 1, got {K}")
    values = [Fraction(1)]
    for n in range(1, 2 * K + 1):
        acc = Fraction(0)
        for j in range(n):
            acc += math.comb(n + 1, j) * values[j]
        values.append(-acc / (n + 1))
    return BernoulliTable(tuple(values))


@lru_cache(maxsize=None)
def euler_numbers(K: int) -> EulerTable:
    """Table of E_0 .. E_{2K} from sum_{j even} C(2n, j) E_j = 0 for n >= 1."""
    if K < 1:
        raise DomainError(f"euler_numbers requires K >= 1, got {K}")
    even = [1]
    for n in range(1, K + 1):
        acc = 0
        for j in range(n):
            acc += math.comb(2 * n, 2 * j) * even[j]
        even.append(-acc)
    values = []
    for n in range(2 * K + 1):
        values.append(even[n // 2] if n % 2 == 0 else 0)
    return EulerTable(tuple(values))

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Tuple

from src.exceptions import IndexRangeError


@dataclass(frozen=True)
class StirlingTable:
    """Signed Stirling numbers of the first kind s(m, l), 0 <= l <= m <= max_order.

    Entries satisfy (a)_m = sum_l (-1)^(m+l) s(m, l) a^l for the rising
    factorial (a)_m = a (a+1) ... (a+m-1).
    """

    max_order: int
    entries: Tuple[Tuple[int, ...], ...]

    def entry(self, m: int, l: int) -> int:
        if not 0 <= m <= self.max_order:
            raise IndexRangeError("Stirling order outside the table", m=m, max_order=self.max_order)
        if l < 0 or l > m:
            return 0
        return self.entries[m][l]

    def pochhammer_coefficients(self, m: int) -> List[int]:
        """Coefficients of a^0 .. a^m in the rising factorial (a)_m."""
        return [(-1) ** (m + l) * self.entry(m, l) for l in range(m + 1)]


@lru_cache(maxsize=None)
def stirling_table(max_order: int) -> StirlingTable:
    """Build the table with s(m+1, l) = s(m, l-1) - m s(m, l)."""
    if max_order < 0:
        raise IndexRangeError("max_order must be non-negative", max_order=max_order)
    rows: List[List[int]] = [[1]]
    for m in range(max_order):
        previous = rows[-1] + [0]
        row = [0] * (m + 2)
        for l in range(1, m + 2):
            row[l] = previous[l - 1] - m * previous[l]
        rows.append(row)
    return StirlingTable(max_order=max_order, entries=tuple(tuple(r) for r in rows))


@lru_cache(maxsize=None)
def eulerian_numbers(k: int) -> Tuple[int, ...]:
    """Row A(k, 0..k-1) of the Eulerian triangle; A(0) is (1,)."""
    row = [1]
    for n in range(1, k + 1):
        nxt = [0] * n
        for i in range(n):
            left = row[i - 1] if 0 < i <= len(row) else 0
            here = row[i] if i < len(row) else 0
            nxt[i] = (n - i) * left + (i + 1) * here
        row = nxt
    return tuple(row)


def binom(top: int, bottom: int) -> int:
    """Binomial coefficient extended to negative tops; zero for negative bottoms."""
    if bottom < 0:
        return 0
    if top >= 0:
        return comb(top, bottom) if bottom <= top else 0
    return (-1) ** bottom * comb(bottom - top - 1, bottom)


@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> Tuple[Fraction, ...]:
    """Exact B_0 .. B_n with B_1 = -1/2."""
    if n < 0:
        raise IndexRangeError("Bernoulli index must be non-negative", n=n)
    numbers = [Fraction(1)]
    for m in range(1, n + 1):
        numbers.append(-sum(comb(m + 1, k) * numbers[k] for k in range(m)) / (m + 1))
    return tuple(numbers)

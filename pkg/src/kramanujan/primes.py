"""Segmented sieve and exact prime-counting / nth-prime / gap queries."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import DomainError, RangeError, ResourceLimitError

# Hard cap on sieve limits; keeps the prime table well under a few GiB.
DEFAULT_SIEVE_BUDGET = 2_000_000_000

# Number of odd integers per segment. Semantically invisible: results are
# identical for any positive value (tested).
_SEGMENT_ODDS = 1 << 22


def _small_sieve(limit: int) -> np.ndarray:
    """Plain sieve for the base primes up to sqrt of the real limit."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


class PrimeStore:
    """Immutable, 1-indexed table of all primes up to ``limit``.

    Index n holds p_n with p_1 = 2.  Construct via :func:`sieve_upto`.
    """

    __slots__ = ("limit", "primes")

    def __init__(self, limit: int, primes: np.ndarray):
        self.limit = limit
        self.primes = primes
        primes.setflags(write=False)

    @property
    def count(self) -> int:
        return len(self.primes)

    def prime_count(self, x: int | Fraction) -> int:
        """pi(x) for integer or exact rational x with x <= limit."""
        if isinstance(x, Fraction):
            fx = x.numerator // x.denominator
        else:
            fx = int(x)
        if fx > self.limit:
            raise DomainError(f"pi({x}) needs a sieve past {self.limit}")
        return int(np.searchsorted(self.primes, fx, side="right"))

    def nth_prime(self, n: int) -> int:
        if not 1 <= n <= self.count:
            raise RangeError(f"prime index {n} outside 1..{self.count}")
        return int(self.primes[n - 1])

    def gap_pairs(self, lo: int, hi: int) -> Iterator[tuple[int, int]]:
        """Consecutive prime pairs (p_j, p_{j+1}) with lo <= p_j <= hi.

        Also yields the straddling pair with p_j < lo < p_{j+1} when one
        exists, so callers always see the gap covering lo.
        """
        lo_idx, hi_idx = self._pair_index_range(lo, hi)
        for j in range(lo_idx, hi_idx):
            yield int(self.primes[j]), int(self.primes[j + 1])

    def gap_arrays(self, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
        """Vectorized form of :meth:`gap_pairs`: arrays (p_j, p_{j+1})."""
        lo_idx, hi_idx = self._pair_index_range(lo, hi)
        return self.primes[lo_idx:hi_idx], self.primes[lo_idx + 1 : hi_idx + 1]

    def _pair_index_range(self, lo: int, hi: int) -> tuple[int, int]:
        if not 2 <= lo <= hi <= self.limit:
            raise RangeError(f"bad gap range [{lo}, {hi}] for limit {self.limit}")
        # 0-based index of the first pair: the prime starting the gap that
        # covers lo (straddling pair included).
        lo_idx = max(int(np.searchsorted(self.primes, lo, side="left")) - 1, 0)
        if self.primes[lo_idx] < lo and lo_idx + 1 < self.count:
            if self.primes[lo_idx + 1] <= lo:
                lo_idx += 1
        # pairs run while p_j <= hi and p_{j+1} is in the store
        hi_idx = int(np.searchsorted(self.primes, hi, side="right"))
        hi_idx = min(hi_idx, self.count - 1)
        return lo_idx, hi_idx

    def __repr__(self) -> str:
        return f"PrimeStore(limit={self.limit}, count={self.count})"


def sieve_upto(limit: int, budget: int = DEFAULT_SIEVE_BUDGET) -> PrimeStore:
    """All primes <= limit via an odd-only segmented sieve."""
    if limit < 0:
        raise RangeError("sieve limit must be non-negative")
    if limit > budget:
        raise ResourceLimitError(f"sieve limit {limit} exceeds budget {budget}")
    if limit < 2:
        return PrimeStore(limit, np.empty(0, dtype=np.int64))

    base = _small_sieve(int(limit**0.5) + 1)
    odd_base = base[base != 2]
    chunks = [np.array([2], dtype=np.int64)]

    span = 2 * _SEGMENT_ODDS
    low = 3
    while low <= limit:
        high = min(low + span, limit + 1)  # exclusive, odd-aligned low
        mask = np.ones((high - low + 1) // 2, dtype=bool)
        for p in odd_base:
            p = int(p)
            start = max(p * p, ((low + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start >= high:
                continue
            mask[(start - low) // 2 :: p] = False
        chunks.append(low + 2 * np.flatnonzero(mask).astype(np.int64))
        low = high

    return PrimeStore(limit, np.concatenate(chunks))


def trial_division_primes(limit: int) -> list[int]:
    """Independent oracle for sieve output; O(n sqrt n), small limits only."""
    out = []
    for n in range(2, limit + 1):
        d = 2
        while d * d <= n:
            if n % d == 0:
                break
            d += 1
        else:
            out.append(n)
    return out

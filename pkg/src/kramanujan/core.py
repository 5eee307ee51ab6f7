"""First (and nth) k-Ramanujan primes: definition-level oracle, fast
characterization path, explicit upper bounds, and the breakpoint table."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .errors import (
    DomainError,
    InconclusiveError,
    InsufficientStoreError,
    RangeError,
    UnsupportedRangeError,
)
from .primes import PrimeStore, sieve_upto
from .theorems import BUILTIN_THEOREMS, HIGH_PRECISION_DPS, TRUDGIAN, GapTheorem

# Thresholds with a known closed answer or a precomputed certified bound:
# R_1 = 2 for k >= 5/3, and R_1 <= 58890 for every k >= 1.0008968291
# (R_1 is monotone non-increasing in k, so the bound certified for the
# smallest such k covers all larger ones).
TWO_CUTOFF = Fraction(5, 3)
FAST_K = Fraction("1.0008968291")
FAST_BOUND = 58890
FAST_INDEX_LIMIT = 5950

_K_PATTERN = re.compile(r"^\s*(\d+(?:\.\d{1,15})?|\d+/\d+)\s*$")

# Sieves are cached in power-of-two buckets; a bigger store answers any
# smaller request identically because all searches are index-bounded.
_STORE_CACHE: dict[int, PrimeStore] = {}
_STORE_CACHE_SLOTS = 6


def parse_k(text: str) -> Fraction:
    """Parse a threshold k from a decimal (<= 15 fractional digits) or 'p/q'.

    Raises ValueError on malformed input, DomainError when k <= 1.
    """
    m = _K_PATTERN.match(text)
    if not m:
        raise ValueError(f"cannot parse threshold {text!r}")
    k = Fraction(m.group(1))
    if k <= 1:
        raise DomainError(f"threshold k must exceed 1, got {k}")
    return k


@dataclass(frozen=True)
class BreakpointEntry:
    """One ratio-record row: p_index/p_{index-1} beats every later gap ratio."""

    index: int
    prime: int
    prev_prime: int
    ratio: Fraction


def shared_store(limit: int) -> PrimeStore:
    """Cached sieve, rounded up to a power-of-two bucket."""
    bucket = 1 << max(limit, 2).bit_length()
    for cached in _STORE_CACHE.values():
        if cached.limit >= limit:
            return cached
    if len(_STORE_CACHE) >= _STORE_CACHE_SLOTS:
        _STORE_CACHE.pop(next(iter(_STORE_CACHE)))
    store = sieve_upto(bucket)
    _STORE_CACHE[bucket] = store
    return store


def cor_bound(k: Fraction, thm: GapTheorem) -> int:
    """Certified integer upper bound k*exp((c/(k-1))^(1/e)) for R_1^(k).

    Evaluated in double precision, inflated by 1 + 1e-12, rounded up; inputs
    within relative 1e-9 of the theorem's k_max are re-verified at 50-digit
    precision.  Only upward error is acceptable: the result must dominate
    the true bound.
    """
    if k <= 1:
        raise DomainError(f"threshold k must exceed 1, got {k}")
    if not thm.admits(k):
        raise DomainError(f"k = {k} exceeds k_max of theorem {thm.name}")
    kf = float(k)
    radicand = float(thm.c / (k - 1))
    value = kf * math.exp(radicand ** (1.0 / thm.e)) * (1.0 + 1e-12)
    bound = math.ceil(value)
    with mpmath.workdps(HIGH_PRECISION_DPS):
        k_hp = mpmath.mpf(k.numerator) / k.denominator
        if abs(thm.k_max() - k_hp) < 1e-9 * thm.k_max():
            t = thm.c / (k - 1)
            t_hp = mpmath.mpf(t.numerator) / t.denominator
            hp = k_hp * mpmath.exp(mpmath.root(t_hp, thm.e))
            bound = int(mpmath.ceil(hp * (1 + mpmath.mpf("1e-45"))))
    return bound


def _max_ratio_index(store: PrimeStore, k: Fraction, hi_index: int) -> int | None:
    """Largest n in [2, hi_index] with p_n/p_{n-1} > k exactly, else None.

    Double-precision prescreen over the whole range, exact big-int
    confirmation of candidates from the top down.
    """
    primes = store.primes[:hi_index]
    if len(primes) < 2:
        return None
    ratios = primes[1:].astype(np.float64) / primes[:-1].astype(np.float64)
    candidates = np.flatnonzero(ratios >= float(k) * (1.0 - 1e-12))
    num, den = k.numerator, k.denominator
    for j in reversed(candidates.tolist()):
        if int(primes[j + 1]) * den > int(primes[j]) * num:
            return j + 2  # ratio index n is 1-based: p_n / p_{n-1}
    return None


def certified_bound(k: Fraction) -> int:
    """Smallest certified upper bound for R_1^(k) from the built-in facts."""
    if k <= 1:
        raise DomainError(f"threshold k must exceed 1, got {k}")
    if k >= TWO_CUTOFF:
        return 2
    if k >= FAST_K:
        return FAST_BOUND
    with mpmath.workdps(HIGH_PRECISION_DPS):
        if mpmath.mpf(k.numerator) / k.denominator < TRUDGIAN.k_max():
            raise UnsupportedRangeError(
                f"k = {k} is below the coverage floor (trudgian k_max ~ 1.0000407)"
            )
    applicable = [t for t in BUILTIN_THEOREMS.values() if t.admits(k)]
    return min(cor_bound(k, t) for t in applicable)


def first_k_ramanujan(k: Fraction, store: PrimeStore | None = None) -> tuple[int, int]:
    """R_1^(k) and its 1-based prime index.

    Dispatch: closed form for k >= 5/3; the fixed 58890 horizon for
    k >= 1.0008968291; otherwise the cheapest theorem-certified bound.
    The answer is p_m for m = max{n >= 2 | p_n/p_{n-1} > k}, or 2 when no
    gap ratio exceeds k.
    """
    if k <= 1:
        raise DomainError(f"threshold k must exceed 1, got {k}")
    if k >= TWO_CUTOFF:
        return 2, 1
    bound = certified_bound(k)
    if store is None:
        store = shared_store(bound)
    elif store.limit < bound:
        raise InsufficientStoreError(
            f"store limit {store.limit} below certified bound {bound} for k = {k}"
        )
    if k >= FAST_K:
        hi_index = min(FAST_INDEX_LIMIT, store.count)
    else:
        hi_index = store.prime_count(bound)
    m = _max_ratio_index(store, k, hi_index)
    if m is None:
        return 2, 1
    return store.nth_prime(m), m


def is_first_k_ramanujan(N: int, k: Fraction, store: PrimeStore) -> bool:
    """Characterization check: p_{n+1}/p_n <= k for all n >= N within the
    store, and p_N/p_{N-1} > k (vacuous for N = 1)."""
    if not 1 <= N <= store.count - 1:
        raise RangeError(f"index {N} outside 1..{store.count - 1}")
    if k <= 1:
        raise DomainError(f"threshold k must exceed 1, got {k}")
    bound = certified_bound(k)
    if store.limit < bound:
        raise InsufficientStoreError(
            f"store limit {store.limit} below certified bound {bound} for k = {k}"
        )
    m = _max_ratio_index(store, k, store.count)
    return (m if m is not None else 1) == N


def brute_force_R(
    k: Fraction, n: int, scan_limit: int, store: PrimeStore | None = None
) -> int:
    """Definition-level oracle for R_n^(k) by exhaustive critical-point scan.

    The deficiency D(x) = pi(x) - pi(x/k) can only drop where pi(x/k) jumps,
    i.e. at x = k*p; every x below p_n fails trivially since pi(x) < n
    there.  The answer is the smallest prime above the last failing point.
    Raises InconclusiveError when the last failure is past scan_limit/2,
    because the tail cannot then be trusted.
    """
    if n < 1:
        raise DomainError(f"Ramanujan index must be >= 1, got {n}")
    if k <= 1:
        raise DomainError(f"threshold k must exceed 1, got {k}")
    if scan_limit < 4:
        raise RangeError(f"scan limit {scan_limit} too small")
    if store is None:
        store = shared_store(scan_limit)
    elif store.limit < scan_limit:
        raise InsufficientStoreError(
            f"store limit {store.limit} below scan limit {scan_limit}"
        )
    primes = store.primes
    num, den = k.numerator, k.denominator
    if n > store.prime_count(scan_limit):
        raise InconclusiveError(f"fewer than {n} primes below scan limit {scan_limit}")

    # Critical points x = k*p for primes p with k*p <= scan_limit.
    p_hi = (scan_limit * den) // num
    count = int(np.searchsorted(primes, p_hi, side="right"))
    last_fail_floor = None  # floor(k*p) at the last failing critical point
    last_fail_p = None
    ps = primes[:count].tolist()
    floors = np.fromiter(
        ((num * p) // den for p in ps), dtype=np.int64, count=count
    )
    pi_at = np.searchsorted(primes, floors, side="right")
    deficiency = pi_at - (np.arange(count) + 1)
    failing = np.flatnonzero(deficiency < n)
    if len(failing):
        j = int(failing[-1])
        last_fail_p = ps[j]
        last_fail_floor = int(floors[j])
        if 2 * num * last_fail_p > scan_limit * den:
            raise InconclusiveError(
                f"last failing point k*{last_fail_p} is above {scan_limit}/2"
            )
        idx = int(np.searchsorted(primes, last_fail_floor, side="right"))
        critical_answer = int(primes[idx])
    else:
        critical_answer = 2
    # x < p_n always fails: pi(x) <= n-1 regardless of k.
    return max(critical_answer, store.nth_prime(n))


def breakpoints(
    k_min: Fraction, index_limit: int, store: PrimeStore
) -> list[BreakpointEntry]:
    """Right-to-left strict record gap ratios over indices [2, index_limit].

    Entry a is kept iff p_a/p_{a-1} beats every later ratio in range and
    exceeds k_min strictly.  Output is sorted by index, so ratios strictly
    decrease along the list.
    """
    if not 2 <= index_limit <= store.count:
        raise RangeError(f"index limit {index_limit} outside 2..{store.count}")
    primes = store.primes[:index_limit].tolist()
    out: list[BreakpointEntry] = []
    best_num, best_den = k_min.numerator, k_min.denominator  # ratio to beat
    for a in range(index_limit, 1, -1):
        pa, pa_prev = primes[a - 1], primes[a - 2]
        if pa * best_den > best_num * pa_prev:
            out.append(BreakpointEntry(a, pa, pa_prev, Fraction(pa, pa_prev)))
            best_num, best_den = pa, pa_prev
    out.reverse()
    return out


def k_equals_gap_ratio(k: Fraction, store: PrimeStore, hi_index: int) -> bool:
    """True when k is exactly some gap ratio p_n/p_{n-1}, n <= hi_index.

    Boundary thresholds sit on the closed end of a breakpoint interval;
    callers should surface this in output.
    """
    primes = store.primes[: min(hi_index, store.count)]
    if len(primes) < 2:
        return False
    num, den = k.numerator, k.denominator
    ratios = primes[1:].astype(np.float64) / primes[:-1].astype(np.float64)
    near = np.flatnonzero(np.abs(ratios - float(k)) < 1e-9 * float(k))
    return any(
        int(primes[j + 1]) * den == int(primes[j]) * num for j in near.tolist()
    )

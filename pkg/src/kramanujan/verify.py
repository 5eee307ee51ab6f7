"""Empirical verification of short-interval prime theorems over prime ranges.

The threshold function x(1 + c/log^e x) is increasing for x >= 3, so over
the real points inside a prime gap (p, q) the binding check is at the left
end: x = p, or x = lo when lo falls inside the gap.  One check per gap
therefore covers every real x in the scanned range.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DomainError, RangeError
from .primes import PrimeStore
from .theorems import GapTheorem

# Pairs whose double-precision margin is thinner than this (relative) are
# reclassified with 50-digit arithmetic before being reported either way.
_MARGIN_GUARD = 1e-9


@dataclass
class VerificationReport:
    theorem: GapTheorem
    lo: int
    hi: int
    pairs_checked: int
    violations: list[tuple[int, int, float]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations


def _scan_chunk(
    thm: GapTheorem, p: np.ndarray, q: np.ndarray, lo: int
) -> list[tuple[int, int, float]]:
    """Violating pairs within one slice of the gap arrays."""
    x = np.maximum(p, lo).astype(np.float64)
    thr = x * (1.0 + float(thm.c) / np.log(x) ** thm.e)
    qf = q.astype(np.float64)
    margin = (thr - qf) / thr
    suspect = np.flatnonzero(margin < _MARGIN_GUARD)
    out = []
    for j in suspect.tolist():
        xi, qi = max(int(p[j]), lo), int(q[j])
        if not thm.threshold_exceeds(xi, qi):
            out.append((int(p[j]), qi, float(thr[j])))
    return out


def verify_theorem(
    thm: GapTheorem, lo: int, hi: int, store: PrimeStore, jobs: int = 1
) -> VerificationReport:
    """Check every gap intersecting [lo, hi] against the theorem's interval.

    Zero violations certifies the statement empirically for all real x from
    lo up to the start of the last checked pair.
    """
    if lo < max(thm.x0, 3):
        raise DomainError(
            f"scan start {lo} is below the theorem's validity threshold {thm.x0}"
        )
    if not lo <= hi <= store.limit:
        raise RangeError(f"bad verification range [{lo}, {hi}]")
    start = time.perf_counter()
    p, q = store.gap_arrays(lo, hi)
    if jobs <= 1 or len(p) < 1024:
        violations = _scan_chunk(thm, p, q, lo)
    else:
        cuts = np.linspace(0, len(p), jobs + 1, dtype=int)
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                lambda ab: _scan_chunk(thm, p[ab[0] : ab[1]], q[ab[0] : ab[1]], lo),
                zip(cuts[:-1], cuts[1:]),
            )
        violations = [v for part in parts for v in part]
    return VerificationReport(
        theorem=thm,
        lo=lo,
        hi=hi,
        pairs_checked=len(p),
        violations=violations,
        elapsed=time.perf_counter() - start,
    )


def largest_violation(
    c: Fraction,
    e: int,
    lo: int,
    hi: int,
    store: PrimeStore,
) -> tuple[int, int] | None:
    """Largest prime p in [lo, hi] whose gap breaks q <= p(1 + c/log^e p).

    A hit means the candidate parameters (c, e) only hold from some x0 > p.
    """
    if not 2 <= lo <= hi <= store.limit:
        raise RangeError(f"bad scan range [{lo}, {hi}]")
    if c <= 0 or e < 1:
        raise DomainError(f"invalid candidate parameters c={c}, e={e}")
    probe = GapTheorem("candidate", 2, c, e)
    p, q = store.gap_arrays(lo, hi)
    inside = p >= lo  # threshold is taken at x = p, so straddle is excluded
    hits = _scan_chunk(probe, p[inside], q[inside], lo=2)
    if not hits:
        return None
    worst = max(hits)
    return worst[0], worst[1]

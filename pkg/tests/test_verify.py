from fractions import Fraction

import pytest

from kramanujan import (
    AXLER,
    DUSART,
    DomainError,
    GapTheorem,
    RangeError,
    largest_violation,
    verify_theorem,
)

CUSTOM_WEAK = GapTheorem("custom", 58837, Fraction("0.05"), 3)


def test_axler_holds_to_10m(store_10m):
    report = verify_theorem(AXLER, 58837, 10**7, store_10m)
    assert report.ok
    assert report.pairs_checked > 600_000


def test_dusart_holds_to_10m(store_10m):
    report = verify_theorem(DUSART, 396738, 10**7, store_10m)
    assert report.ok


def test_weak_candidate_fails(store_10m):
    report = verify_theorem(CUSTOM_WEAK, 58837, 10**6, store_10m)
    assert not report.ok
    p, q, thr = report.violations[0]
    assert q > thr
    # the gap 58831 -> 58889 already exceeds the tiny allowance
    assert (58831, 58889) in {(v[0], v[1]) for v in report.violations}


def test_straddling_gap_checked_at_lo(store_10m):
    # lo = 58837 falls inside the gap (58831, 58889); the check runs at
    # x = 58837 and the interval reaches past 58889
    report = verify_theorem(AXLER, 58837, 58890, store_10m)
    assert report.ok
    assert report.pairs_checked == 2


def test_below_validity_threshold_rejected(store_10m):
    with pytest.raises(DomainError):
        verify_theorem(AXLER, 1000, 10**6, store_10m)


def test_range_errors(store_10m):
    with pytest.raises(RangeError):
        verify_theorem(AXLER, 10**6, 10**5, store_10m)
    with pytest.raises(RangeError):
        verify_theorem(AXLER, 58837, store_10m.limit + 1, store_10m)


def test_determinism_and_jobs_merge(store_10m):
    a = verify_theorem(CUSTOM_WEAK, 58837, 10**6, store_10m)
    b = verify_theorem(CUSTOM_WEAK, 58837, 10**6, store_10m)
    c = verify_theorem(CUSTOM_WEAK, 58837, 10**6, store_10m, jobs=4)
    assert a.violations == b.violations == c.violations
    assert a.pairs_checked == c.pairs_checked


def test_weaker_theorem_never_worse(store_10m):
    # same exponent, larger allowance: violation set can only shrink
    weak = verify_theorem(CUSTOM_WEAK, 58837, 10**6, store_10m)
    stronger_c = GapTheorem("custom", 58837, Fraction("0.02"), 3)
    strong = verify_theorem(stronger_c, 58837, 10**6, store_10m)
    assert len(weak.violations) <= len(strong.violations)
    assert {(p, q) for p, q, _ in weak.violations} <= {
        (p, q) for p, q, _ in strong.violations
    }


def test_largest_violation_below_axler_x0(store_10m):
    hit = largest_violation(Fraction("1.188"), 3, 2, 58837, store_10m)
    assert hit is not None
    p, q = hit
    assert p < 58837
    # consistency: the reported pair really violates the candidate interval
    assert q > AXLER.threshold(float(p))


def test_largest_violation_none_for_generous_allowance(store_10m):
    assert largest_violation(Fraction(10), 1, 10, 10**5, store_10m) is None


def test_largest_violation_range_error(store_10m):
    with pytest.raises(RangeError):
        largest_violation(Fraction(1), 1, 100, 10, store_10m)

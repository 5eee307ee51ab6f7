"""Exact computation of k-Ramanujan primes, certified upper bounds under
short-interval prime theorems, breakpoint tables, and empirical theorem
verification over prime ranges."""

from .core import (
    BreakpointEntry,
    breakpoints,
    brute_force_R,
    certified_bound,
    cor_bound,
    first_k_ramanujan,
    is_first_k_ramanujan,
    parse_k,
)
from .errors import (
    DomainError,
    InconclusiveError,
    InsufficientStoreError,
    KRamanujanError,
    RangeError,
    ResourceLimitError,
    UnsupportedRangeError,
)
from .primes import PrimeStore, sieve_upto
from .theorems import AXLER, BUILTIN_THEOREMS, DUSART, RAMARE_SAOUTER, TRUDGIAN, GapTheorem
from .verify import VerificationReport, largest_violation, verify_theorem

__all__ = [
    "AXLER",
    "BUILTIN_THEOREMS",
    "BreakpointEntry",
    "DUSART",
    "DomainError",
    "GapTheorem",
    "InconclusiveError",
    "InsufficientStoreError",
    "KRamanujanError",
    "PrimeStore",
    "RAMARE_SAOUTER",
    "RangeError",
    "ResourceLimitError",
    "TRUDGIAN",
    "UnsupportedRangeError",
    "VerificationReport",
    "breakpoints",
    "brute_force_R",
    "certified_bound",
    "cor_bound",
    "first_k_ramanujan",
    "is_first_k_ramanujan",
    "largest_violation",
    "parse_k",
    "sieve_upto",
    "verify_theorem",
]

__version__ = "0.1.0"

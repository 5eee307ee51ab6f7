"""Exception types shared across the package."""


class KRamanujanError(Exception):
    """Base class for all package errors."""


class DomainError(KRamanujanError):
    """An argument is outside the mathematical domain of the operation."""


class RangeError(KRamanujanError):
    """An index or interval argument is malformed or out of bounds."""


class UnsupportedRangeError(DomainError):
    """The threshold k lies below the coverage of every built-in theorem."""


class ResourceLimitError(KRamanujanError):
    """A sieve or scan would exceed the configured memory budget."""


class InconclusiveError(KRamanujanError):
    """An oracle scan cannot certify its answer within the given limit."""


class InsufficientStoreError(KRamanujanError):
    """The supplied prime store does not reach a certified bound."""

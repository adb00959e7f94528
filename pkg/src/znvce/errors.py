"""Exception types shared across the package."""


class ZnvceError(Exception):
    """Base class for all package errors."""


class DomainError(ZnvceError, ValueError):
    """Numeric input outside the supported domain (n < 2, vertex out of range, ...)."""


class ShapeError(ZnvceError, ValueError):
    """Modulus shape does not fit the requested construction."""


class PartitionError(ZnvceError, ValueError):
    """Invalid bipartition: empty side, size mismatch, or bad vertex ids."""


class FormatError(ZnvceError, ValueError):
    """Malformed graph or partition file."""


class ConstructionError(ZnvceError, RuntimeError):
    """A constructed partition failed its own verification; indicates a bug, not bad input."""

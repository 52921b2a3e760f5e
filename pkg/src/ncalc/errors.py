"""Exceptions and the global size cap."""


class NcalcError(Exception):
    """Base class for every error raised by the library."""


class CapExceeded(NcalcError):
    """A graded piece or complex grew past the configured dimension bound."""


class ValidationError(NcalcError):
    """Input data failed a structural check (associativity, Leibniz, ...)."""


DEFAULT_MAX_DIM = 20000
_max_dim = DEFAULT_MAX_DIM


def max_dim():
    return _max_dim


def set_max_dim(n):
    """Set the bound checked by :func:`check_dim`; returns the previous value."""
    global _max_dim
    old, _max_dim = _max_dim, int(n)
    return old


def check_dim(n, what="graded piece"):
    if n > _max_dim:
        raise CapExceeded(f"{what} has dimension {n}, above the bound {_max_dim}")

"""Exception hierarchy shared across the package."""


class StegotaxError(Exception):
    """Base class for all errors raised by this package."""

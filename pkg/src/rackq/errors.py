"""Common base class for the package's domain errors."""


class RackError(Exception):
    """Base class for every domain error raised by this package."""

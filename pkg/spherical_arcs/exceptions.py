"""
Spherical Arcs - Exception Base
Every error raised by the package derives from SphericalArcsError.
"""


class SphericalArcsError(Exception):
    """Base class for errors reported to library and CLI callers."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class UsageError(SphericalArcsError):
    """Raised when the command line cannot be parsed."""

"""Exception hierarchy shared across the library."""


class GenSeriesError(Exception):
    """Base class for every error raised by this library."""


class InputError(GenSeriesError):
    """Invalid user-supplied data.  The CLI maps this to exit code 1."""


class CarrierError(InputError):
    """Element or operation applied to the wrong carrier."""


class DescriptorError(InputError):
    """Support descriptor malformed or not admitted for the carrier."""


class SizeBoundError(InputError):
    """A configured search or enumeration bound was exceeded."""


class StrictnessError(InputError):
    """A pomonoid failed the strict-translation hypothesis."""


class InternalError(GenSeriesError):
    """Invariant violation inside the library: always a bug.

    The CLI maps this to exit code 2.
    """

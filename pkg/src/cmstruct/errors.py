"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all cmstruct errors."""


class GraphFormatError(Error):
    """Malformed graph text; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ColorRangeError(Error):
    """A color index fell outside 1..k."""


class NotConnectedError(Error):
    """Operation requires a connected graph."""


class OddNError(Error):
    """The matching-size parameter n must be even."""


class HasLargeMatchingError(Error):
    """Graph has a matching of size n/2, outside the intended input class."""


class HasConnectedMatchingError(Error):
    """Graph has a connected matching of size n/2."""


class HasMonochromaticMatchingError(Error):
    """Coloring has a monochromatic connected matching of size n/2."""


class InvalidPartitionError(Error):
    """A vertex partition does not satisfy its required conditions."""


class NotPrimeError(Error):
    """Parameter must be a prime number."""

"""Exception hierarchy shared by the package."""


class MultiscaleError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(MultiscaleError, ValueError):
    """Invalid parameters (block width, level count, interval bound)."""


class DomainError(MultiscaleError, ValueError):
    """Argument outside the mathematical domain of a function."""


class InvalidPatternError(MultiscaleError, ValueError):
    """A pattern value that cannot occur for the requested analysis."""


class StorageError(MultiscaleError, OSError):
    """Failure reading or writing a container file."""


class FormatError(StorageError):
    """Structurally invalid container (bad magic, truncation, trailing bytes)."""


class UnsupportedVersionError(StorageError):
    """Container written with a format version this reader does not handle."""


class ParamsMismatchError(StorageError):
    """Container parameters differ from the ones the caller pinned."""


class MissingDataError(MultiscaleError, LookupError):
    """A stored hierarchy required for an analysis is not available."""


class RangeError(MultiscaleError, IndexError):
    """Block index or count beyond the available data."""

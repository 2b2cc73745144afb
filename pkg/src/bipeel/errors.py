"""Exception types shared across the package."""


class BipeelError(Exception):
    """Base class for all package-specific errors."""


class EdgeListParseError(BipeelError):
    """A line in an edge-list source could not be parsed."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class EmptyGraphError(BipeelError):
    """An edge-list source produced no usable edges."""


class ProjectionSizeError(BipeelError):
    """Projection exhausted memory; the co-occurrence graph was too large."""


class DatasetError(BipeelError):
    """Problem fetching or normalizing a registered dataset."""


class DownloadError(DatasetError):
    """A dataset download failed; no partial file was kept."""


class ChecksumMismatchError(DatasetError):
    """Downloaded bytes did not match the pinned checksum."""

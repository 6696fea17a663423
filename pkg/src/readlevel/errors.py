"""Exception types shared across the toolkit.

Everything inherits from ReadlevelError so the CLI can map any toolkit
failure to exit status 2 in one place.
"""


class ReadlevelError(Exception):
    """Base class for all toolkit errors."""


class EncodingError(ReadlevelError):
    """Input bytes are not valid UTF-8."""


class InvalidTokenError(ReadlevelError):
    """A token that cannot be syllable-counted (no letters or digits)."""


class EmptyDocumentError(ReadlevelError):
    """An operation that needs at least one token got an empty document."""


class InconsistentCountsError(ReadlevelError):
    """Count arguments that contradict each other (e.g. difficult > words)."""


class DegenerateCorpusError(ReadlevelError):
    """Training corpus with fewer than two distinct grade levels."""


class InvalidEntryError(ReadlevelError):
    """A malformed training-corpus entry (empty document, bad grade, ...)."""


class EmptyEvidenceError(ReadlevelError):
    """Scoring input yielded no features to score."""


class TreeParseError(ReadlevelError):
    """Malformed bracketed parse tree. `offset` is 1-based within the line."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} at offset {offset}"
        super().__init__(message)
        self.offset = offset


class ModelFormatError(ReadlevelError):
    """Model file with an unsupported version or malformed contents."""


class ManifestError(ReadlevelError):
    """Malformed manifest or scores CSV."""

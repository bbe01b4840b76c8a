"""Exception hierarchy shared across the package."""


class CpmxError(Exception):
    """Base class for all cpmx errors."""


class EmptyText(CpmxError):
    """The input text is empty (or became empty after stripping)."""


class InvalidSymbol(CpmxError):
    """The input contains the reserved sentinel byte 0x00."""


class NoSuchRecord(CpmxError):
    """FASTA record index out of range."""


class ParseError(CpmxError):
    """Malformed input file."""


class CorruptIndex(CpmxError):
    """Index file failed magic/version/checksum validation."""


class TooLargeForInstant(CpmxError):
    """Text exceeds the build cap of the instant lookup table."""


class IndexMismatch(CpmxError):
    """Query ranges do not belong to the index the intersector was built from."""


class PatternTooLong(CpmxError):
    """Pattern is longer than the indexed text."""


class EmptyPattern(CpmxError):
    """Empty pattern rejected."""

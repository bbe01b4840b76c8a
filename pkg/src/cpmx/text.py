"""Input texts: loading, validation, and synthetic DNA generation.

The sentinel byte 0x00 is reserved: it is appended logically during
indexing and must never appear in user data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyText, InvalidSymbol, NoSuchRecord, ParseError

SENTINEL = 0x00

_DNA = b"ACGT"


@dataclass(frozen=True)
class Text:
    """A validated byte sequence; the sentinel is never stored."""

    data: bytes
    alphabet: frozenset = field(init=False)

    def __post_init__(self):
        if len(self.data) == 0:
            raise EmptyText("text must contain at least one symbol")
        if SENTINEL in self.data:
            raise InvalidSymbol("text contains the reserved sentinel byte 0x00")
        object.__setattr__(self, "alphabet", frozenset(self.data))

    @property
    def n(self) -> int:
        return len(self.data)


def load_plain(path, strip_newlines: bool = False) -> Text:
    """Load a raw byte file as a Text, optionally dropping newline bytes."""
    with open(path, "rb") as fh:
        data = fh.read()
    if strip_newlines:
        data = data.replace(b"\r", b"").replace(b"\n", b"")
    if not data:
        raise EmptyText(f"{path}: no symbols left to index")
    return Text(data)


def load_fasta(path, record_index: int = 0) -> Text:
    """Return the record_index-th FASTA record's sequence, uppercased.

    Records are selected, never concatenated: joining records would
    fabricate rotation matches spanning record boundaries.
    """
    records: list[bytearray] = []
    current: bytearray | None = None
    with open(path, "rb") as fh:
        for raw in fh:
            line = raw.rstrip(b"\r\n")
            if line.startswith(b">"):
                current = bytearray()
                records.append(current)
            elif line:
                if current is None:
                    raise ParseError(f"{path}: sequence data before any '>' header")
                current.extend(line.upper())
    if not records:
        raise ParseError(f"{path}: no FASTA records found")
    if not 0 <= record_index < len(records):
        raise NoSuchRecord(
            f"{path}: record {record_index} out of range (file has {len(records)})"
        )
    seq = bytes(records[record_index])
    if not seq:
        raise EmptyText(f"{path}: record {record_index} has an empty sequence")
    return Text(seq)


def random_dna(length: int, seed: int) -> Text:
    """Uniform i.i.d. symbols over {A,C,G,T}; identical (length, seed) give
    identical output."""
    if length == 0:
        raise EmptyText("requested length 0")
    if length < 0:
        raise ValueError("length must be positive")
    rng = np.random.default_rng(seed)
    draws = rng.integers(0, 4, size=length, dtype=np.uint8)
    data = np.frombuffer(_DNA, dtype=np.uint8)[draws].tobytes()
    return Text(data)

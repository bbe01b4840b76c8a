"""Dual suffix arrays with cross-completion labels, range search, persistence.

Two arrays are built: the suffix array of T$ and the suffix array of
rev(T)$.  Each rev-side entry is labeled with the length L of the text
prefix T[0..L) that its suffix spells backwards, so a T-side value and an
R-side label that agree pinpoint a position where a prefix of T ends and
a suffix of T begins.  Ranks are 0-based and ranges half-open.
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import CorruptIndex, InvalidSymbol
from .text import SENTINEL, Text

_MAGIC = b"CPMX"
_VERSION = 1


class Side(Enum):
    T = "t"
    R = "r"


@dataclass(frozen=True)
class SaRange:
    """Half-open rank interval [lo, hi) in one of the two suffix arrays."""

    lo: int
    hi: int
    side: Side

    def __post_init__(self):
        if not 0 <= self.lo <= self.hi:
            raise ValueError(f"bad range [{self.lo}, {self.hi})")

    @property
    def width(self) -> int:
        return self.hi - self.lo

    @property
    def empty(self) -> bool:
        return self.lo == self.hi


def _suffix_array(data: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Suffix array and inverse of `data` by prefix doubling (O(n log n)).

    `data` must end in a unique smallest element (the sentinel), which
    guarantees all ranks become distinct.
    """
    n = data.size
    # dense initial ranks keep every sort key below n, so two keys pack
    # collision-free into one int64
    rank = np.unique(data, return_inverse=True)[1].astype(np.int64)
    k = 1
    while True:
        # fold (rank, rank-k-ahead) into one sortable key; 0 = past the end
        key2 = np.zeros(n, dtype=np.int64)
        if k < n:
            key2[: n - k] = rank[k:] + 1
        combined = rank * (n + 1) + key2
        sa = np.argsort(combined, kind="stable")
        c = combined[sa]
        changed = c[1:] != c[:-1]
        flags = np.empty(n, dtype=np.int64)
        flags[0] = 0
        np.cumsum(changed, out=flags[1:])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = flags
        rank = new_rank
        if flags[-1] == n - 1:
            return sa, rank
        k *= 2


@dataclass
class SuffixIndex:
    """Both suffix arrays plus their inverse permutations.

    sa_t[r]     = start position in T of the rank-r suffix of T$
    labels_r[r] = prefix length labeling the rank-r suffix of rev(T)$
    inv_t[p]    = rank of the suffix starting at p
    inv_r[L]    = rank of the rev-suffix labeled L
    All four have length n+1; position/label n is the sentinel suffix.
    """

    n: int
    sa_t: np.ndarray
    labels_r: np.ndarray
    inv_t: np.ndarray
    inv_r: np.ndarray
    text: Text | None = None
    _rev: bytes | None = field(default=None, repr=False)

    def attach_text(self, text: Text) -> None:
        if text.n != self.n:
            raise ValueError(f"text length {text.n} != index n {self.n}")
        self.text = text
        self._rev = text.data[::-1]

    @property
    def full_t(self) -> SaRange:
        return SaRange(0, self.n + 1, Side.T)

    @property
    def full_r(self) -> SaRange:
        return SaRange(0, self.n + 1, Side.R)


def build_index(text: Text) -> SuffixIndex:
    data = np.frombuffer(text.data + bytes([SENTINEL]), dtype=np.uint8)
    sa_t, inv_t = _suffix_array(data)

    rdata = np.frombuffer(text.data[::-1] + bytes([SENTINEL]), dtype=np.uint8)
    sa_rev, _ = _suffix_array(rdata)
    # start s in rev(T)$ spells T[0 .. n-s) reversed, so its label is n - s
    labels_r = text.n - sa_rev
    inv_r = np.empty_like(labels_r)
    inv_r[labels_r] = np.arange(labels_r.size)

    idx = SuffixIndex(n=text.n, sa_t=sa_t, labels_r=labels_r, inv_t=inv_t, inv_r=inv_r)
    idx.attach_text(text)
    return idx


def find_range(index: SuffixIndex, side: Side, pattern: bytes) -> SaRange:
    """Ranks whose suffix has `pattern` as a prefix, as a half-open range.

    O(|pattern| * log n) byte comparisons; an empty pattern matches every
    suffix.  On the R side the pattern is matched against suffixes of
    rev(T)$ directly (callers pass the reversed rotation part).
    """
    if SENTINEL in pattern:
        raise InvalidSymbol("pattern contains the sentinel byte")
    if index.text is None:
        raise ValueError("index has no text attached; call attach_text() first")
    n = index.n
    m = len(pattern)
    if m == 0:
        return SaRange(0, n + 1, side)
    if side is Side.T:
        base = index.text.data
        starts = index.sa_t
    else:
        base = index._rev
        starts = None  # computed from labels below

    def prefix_at(rank: int) -> bytes:
        s = starts[rank] if starts is not None else n - index.labels_r[rank]
        return base[s : s + m]

    # first rank whose length-m suffix prefix is >= pattern
    lo, hi = 0, n + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if prefix_at(mid) < pattern:
            lo = mid + 1
        else:
            hi = mid
    start = lo
    # first rank whose prefix is > pattern
    hi = n + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if prefix_at(mid) <= pattern:
            lo = mid + 1
        else:
            hi = mid
    return SaRange(start, lo, side)


def save_index(index: SuffixIndex, path) -> None:
    """Write the four arrays in the versioned binary format."""
    head = _MAGIC + struct.pack("<IQ", _VERSION, index.n)
    body = b"".join(
        np.ascontiguousarray(a, dtype="<u8").tobytes()
        for a in (index.sa_t, index.labels_r, index.inv_t, index.inv_r)
    )
    digest = hashlib.blake2b(head + body, digest_size=8).digest()
    with open(path, "wb") as fh:
        fh.write(head)
        fh.write(body)
        fh.write(digest)


def load_index(path, text: Text | None = None) -> SuffixIndex:
    """Read an index written by save_index, verifying magic, version, and
    checksum.  Attaching the original text enables find_range."""
    with open(path, "rb") as fh:
        blob = fh.read()
    if len(blob) < 24 or blob[:4] != _MAGIC:
        raise CorruptIndex(f"{path}: bad magic")
    version, n = struct.unpack_from("<IQ", blob, 4)
    if version != _VERSION:
        raise CorruptIndex(f"{path}: unsupported version {version}")
    body_len = 4 * (n + 1) * 8
    expect = 16 + body_len + 8
    if len(blob) != expect:
        raise CorruptIndex(f"{path}: truncated ({len(blob)} bytes, want {expect})")
    digest = hashlib.blake2b(blob[:-8], digest_size=8).digest()
    if digest != blob[-8:]:
        raise CorruptIndex(f"{path}: checksum mismatch")
    arrays = []
    off = 16
    for _ in range(4):
        arr = np.frombuffer(blob, dtype="<u8", count=n + 1, offset=off).astype(np.int64)
        arrays.append(arr)
        off += (n + 1) * 8
    sa_t, labels_r, inv_t, inv_r = arrays
    idx = SuffixIndex(n=n, sa_t=sa_t, labels_r=labels_r, inv_t=inv_t, inv_r=inv_r)
    if text is not None:
        idx.attach_text(text)
    return idx

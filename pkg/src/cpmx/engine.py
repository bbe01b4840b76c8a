"""Circular pattern matching: report every occurrence of every rotation.

The engine splits the pattern P into a prefix p_f and a suffix p_r; the
rotation that moves p_f to the end reads p_r p_f in the text, so p_f is
searched in the T-side array and reversed p_r in the R-side array, and
their common values mark where p_r ends and p_f begins.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import EmptyPattern, IndexMismatch, PatternTooLong
from .index import Side, SuffixIndex, find_range
from .intersect import Intersector, query_common


class Occurrence(NamedTuple):
    start: int
    rotation: int


def rotation_string(pattern: bytes, k: int) -> bytes:
    """The rotation moving the first k symbols to the end: P[k:] + P[:k]."""
    if not 0 <= k < len(pattern):
        raise ValueError(f"rotation index {k} out of range for m={len(pattern)}")
    return pattern[k:] + pattern[:k]


def _validate(n: int, pattern: bytes) -> None:
    m = len(pattern)
    if m == 0:
        raise EmptyPattern("pattern must contain at least one symbol")
    if m > n:
        raise PatternTooLong(f"pattern length {m} exceeds text length {n}")


def ecpm(
    index: SuffixIndex,
    intersector: Intersector,
    pattern: bytes,
    dedup: bool = False,
) -> list[Occurrence]:
    """All (start, rotation) occurrences of rotations of `pattern` in the
    indexed text, sorted by (start, rotation).

    One split per k in 1..m: the prefix of length k is searched T-side, the
    reversed remainder R-side, and each common value c yields a match of
    rotation k mod m starting at c - (m - k).  k = m is the identity
    rotation with an empty remainder and the full R-side range.  With
    `dedup`, one occurrence per distinct start is kept.
    """
    _validate(index.n, pattern)
    if intersector.index is not index:
        raise IndexMismatch("intersector was built from a different index")
    m = len(pattern)
    out: list[Occurrence] = []
    for k in range(1, m + 1):
        rt = find_range(index, Side.T, pattern[:k])
        if rt.empty:
            continue
        rr = find_range(index, Side.R, pattern[k:][::-1])
        tail = m - k
        rot = k % m
        for c in query_common(intersector, rt, rr):
            out.append(Occurrence(c - tail, rot))
    out.sort()
    if dedup:
        seen = set()
        kept = []
        for occ in out:
            if occ.start not in seen:
                seen.add(occ.start)
                kept.append(occ)
        return kept
    return out


def naive_ecpm(text_data: bytes, pattern: bytes) -> list[Occurrence]:
    """Oracle: slide every rotation across the text with direct comparison.

    Same output contract and ordering as ecpm without dedup.
    """
    n = len(text_data)
    _validate(n, pattern)
    m = len(pattern)
    out: list[Occurrence] = []
    for k in range(m):
        rot = rotation_string(pattern, k)
        for start in range(n - m + 1):
            if text_data[start : start + m] == rot:
                out.append(Occurrence(start, k))
    out.sort()
    return out

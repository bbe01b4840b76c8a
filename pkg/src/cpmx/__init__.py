"""Circular pattern matching over dual suffix arrays.

Report every occurrence of every rotation of a pattern in a text by
searching one suffix array for the rotation's tail and a labeled suffix
array of the reversed text for its head, then intersecting the two rank
ranges through a precomputed lookup structure.
"""

from .engine import Occurrence, ecpm, naive_ecpm, rotation_string
from .index import (
    SaRange,
    Side,
    SuffixIndex,
    build_index,
    find_range,
    load_index,
    save_index,
)
from .intersect import (
    DEFAULT_INSTANT_CAP,
    KINDS,
    InstantIntersector,
    Intersector,
    InverseIntersector,
    LogIntersector,
    RootIntersector,
    build_intersector,
    query_common,
)
from .text import Text, load_fasta, load_plain, random_dna

__all__ = [
    "DEFAULT_INSTANT_CAP",
    "KINDS",
    "InstantIntersector",
    "Intersector",
    "InverseIntersector",
    "LogIntersector",
    "Occurrence",
    "RootIntersector",
    "SaRange",
    "Side",
    "SuffixIndex",
    "Text",
    "build_index",
    "build_intersector",
    "ecpm",
    "find_range",
    "load_fasta",
    "load_index",
    "load_plain",
    "naive_ecpm",
    "query_common",
    "random_dna",
    "rotation_string",
    "save_index",
]

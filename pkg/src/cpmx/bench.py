"""Benchmark harness: build-time table, query-time sweeps, adversarial
all-identical text, and the range-width profile, with CSV/JSON output.

Absolute times are machine-specific; downstream checks assert trends and
orderings only.  Timed sections run strictly sequentially.
"""

from __future__ import annotations

import csv
import gc
import io
import json
import time
from dataclasses import asdict, dataclass

import numpy as np

from .engine import ecpm
from .errors import PatternTooLong, TooLargeForInstant
from .index import Side, build_index, find_range
from .intersect import DEFAULT_INSTANT_CAP, KINDS, build_intersector, query_common
from .text import Text, random_dna

CSV_COLUMNS = ("method", "n", "m", "trial", "build_ns", "query_ns", "matches")


@dataclass
class BenchRecord:
    method: str
    n: int
    m: int
    trial: int
    build_ns: int | None  # None = build skipped (cap excluded this size)
    query_ns: int | None
    matches: int | None


@dataclass
class RangeProfilePoint:
    m: int
    mean_rt_width: float
    mean_rr_width: float


def bench_build(
    methods: list[str],
    sizes: list[int],
    seed: int,
    instant_cap: int = DEFAULT_INSTANT_CAP,
) -> list[BenchRecord]:
    """Time index + intersector construction per (method, n).  Sizes the
    instant cap excludes are recorded with blank timings, not raised."""
    records = []
    for n in sizes:
        text = random_dna(n, seed)
        for method in methods:
            if method == "instant" and n > instant_cap:
                records.append(BenchRecord(method, n, 0, 0, None, None, None))
                continue
            t0 = time.perf_counter_ns()
            index = build_index(text)
            build_intersector(method, index, instant_cap=instant_cap)
            elapsed = time.perf_counter_ns() - t0
            records.append(BenchRecord(method, n, 0, 0, elapsed, None, None))
    return records


def _sample_pattern(rng: np.random.Generator, data: bytes, m: int) -> bytes:
    start = int(rng.integers(0, len(data) - m + 1))
    return data[start : start + m]


def bench_query(
    method: str,
    n: int,
    pattern_lengths: list[int],
    trials: int,
    seed: int,
    instant_cap: int = DEFAULT_INSTANT_CAP,
) -> list[BenchRecord]:
    """Per-trial query timings on random DNA; patterns are random substrings
    of the text so every query has matches."""
    for m in pattern_lengths:
        if m > n:
            raise PatternTooLong(f"pattern length {m} exceeds text length {n}")
    if trials <= 0:
        return []
    text = random_dna(n, seed)
    t0 = time.perf_counter_ns()
    index = build_index(text)
    intersector = build_intersector(method, index, instant_cap=instant_cap)
    build_ns = time.perf_counter_ns() - t0
    rng = np.random.default_rng(seed + 1)
    records = []
    for m in pattern_lengths:
        for trial in range(trials):
            pattern = _sample_pattern(rng, text.data, m)
            t0 = time.perf_counter_ns()
            occs = ecpm(index, intersector, pattern)
            elapsed = time.perf_counter_ns() - t0
            records.append(BenchRecord(method, n, m, trial, build_ns, elapsed, len(occs)))
    return records


def bench_adversarial(
    n: int, pattern: bytes, trials: int = 10
) -> list[BenchRecord]:
    """Query an all-identical text (the self-similar worst case) with the
    three scalable methods and record per-trial lookup times.

    The clock covers only the range intersections (ranges are resolved
    beforehand and occurrence assembly happens outside), with gc paused,
    so the per-method differences are not drowned by shared work.
    """
    text = Text(b"A" * n)
    if set(pattern) - set(text.data):
        raise ValueError("pattern must use the text's single symbol")
    index = build_index(text)
    m = len(pattern)
    splits = [
        (
            find_range(index, Side.T, pattern[:k]),
            find_range(index, Side.R, pattern[k:][::-1]),
        )
        for k in range(1, m + 1)
    ]
    records = []
    for method in ("inverse", "root", "log"):
        t0 = time.perf_counter_ns()
        intersector = build_intersector(method, index)
        build_ns = time.perf_counter_ns() - t0
        matches = len(ecpm(index, intersector, pattern))
        for trial in range(trials):
            gc.disable()
            t0 = time.perf_counter_ns()
            for rt, rr in splits:
                query_common(intersector, rt, rr)
            elapsed = time.perf_counter_ns() - t0
            gc.enable()
            records.append(BenchRecord(method, n, m, trial, build_ns, elapsed, matches))
    return records


def range_profile(
    n: int, pattern_lengths: list[int], samples: int, seed: int
) -> list[RangeProfilePoint]:
    """Mean suffix-array range widths for sampled in-text patterns of each
    length: the T-side width for the pattern, the R-side width for its
    reverse."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    text = random_dna(n, seed)
    index = build_index(text)
    rng = np.random.default_rng(seed + 1)
    points = []
    for m in pattern_lengths:
        wt = 0
        wr = 0
        for _ in range(samples):
            pattern = _sample_pattern(rng, text.data, m)
            wt += find_range(index, Side.T, pattern).width
            wr += find_range(index, Side.R, pattern[::-1]).width
        points.append(RangeProfilePoint(m, wt / samples, wr / samples))
    return points


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    if records and isinstance(records[0], RangeProfilePoint):
        writer.writerow(("m", "mean_rt_width", "mean_rr_width"))
        for p in records:
            writer.writerow((p.m, p.mean_rt_width, p.mean_rr_width))
    else:
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow(
                ["" if getattr(r, c) is None else getattr(r, c) for c in CSV_COLUMNS]
            )
    return buf.getvalue()


def records_from_csv(content: str) -> list[BenchRecord]:
    reader = csv.DictReader(io.StringIO(content))
    out = []
    for row in reader:
        out.append(
            BenchRecord(
                method=row["method"],
                n=int(row["n"]),
                m=int(row["m"]),
                trial=int(row["trial"]),
                build_ns=int(row["build_ns"]) if row["build_ns"] else None,
                query_ns=int(row["query_ns"]) if row["query_ns"] else None,
                matches=int(row["matches"]) if row["matches"] else None,
            )
        )
    return out


def records_to_json(records) -> str:
    return json.dumps([asdict(r) for r in records], indent=2)

"""Four precomputed structures answering one question: which values do a
T-side rank range and an R-side rank range have in common.

All four return identical results; they differ only in build time, space,
and lookup time (constant, polylog, ~n^(2/3), and linear respectively).
"""

from __future__ import annotations

from bisect import insort

import numpy as np

from .errors import IndexMismatch, TooLargeForInstant
from .index import SaRange, Side, SuffixIndex

DEFAULT_INSTANT_CAP = 256

KINDS = ("instant", "log", "root", "inverse")


class Intersector:
    """Base: holds the owning index and validates query ranges."""

    kind: str

    def __init__(self, index: SuffixIndex):
        self.index = index
        self._n1 = index.n + 1

    def _check(self, rt: SaRange, rr: SaRange) -> None:
        if rt.side is not Side.T or rr.side is not Side.R:
            raise IndexMismatch("expected a T-side range and an R-side range")
        if rt.hi > self._n1 or rr.hi > self._n1:
            raise IndexMismatch("range exceeds the rank space of this index")

    def query(self, rt: SaRange, rr: SaRange) -> list[int]:
        raise NotImplementedError


def query_common(x: Intersector, rt: SaRange, rr: SaRange) -> list[int]:
    """Sorted common values of the two ranges; [] when either is empty."""
    x._check(rt, rr)
    if rt.empty or rr.empty:
        return []
    return x.query(rt, rr)


class InverseIntersector(Intersector):
    """No table at all: walk the smaller range and test membership of each
    element's rank in the other array via the inverse permutations."""

    kind = "inverse"

    def __init__(self, index: SuffixIndex):
        super().__init__(index)
        self._sa_t = index.sa_t.tolist()
        self._labels_r = index.labels_r.tolist()
        self._inv_t = index.inv_t.tolist()
        self._inv_r = index.inv_r.tolist()

    def query(self, rt: SaRange, rr: SaRange) -> list[int]:
        out = []
        if rt.width <= rr.width:
            sa_t, inv_r, k, l = self._sa_t, self._inv_r, rr.lo, rr.hi
            for r in range(rt.lo, rt.hi):
                v = sa_t[r]
                if k <= inv_r[v] < l:
                    out.append(v)
        else:
            labels_r, inv_t, i, j = self._labels_r, self._inv_t, rt.lo, rt.hi
            for s in range(rr.lo, rr.hi):
                v = labels_r[s]
                if i <= inv_t[v] < j:
                    out.append(v)
        out.sort()
        return out


class LogIntersector(Intersector):
    """Pair-of-segment-trees table: rank space is padded to a power of two,
    and every (T-segment, R-segment) pair stores its common values.  A query
    decomposes each range into at most 2*log2(N) canonical segments and
    concatenates the stored lists of the segment pairs."""

    kind = "log"

    def __init__(self, index: SuffixIndex):
        super().__init__(index)
        size = 1
        while size < self._n1:
            size *= 2
        self.tree_size = size
        # value v sits at T-leaf inv_t[v] and R-leaf inv_r[v]; it belongs to
        # exactly the pairs of their ancestor segments.  Padding leaves hold
        # no value, so they match nothing.  Ascending v keeps lists sorted.
        pairs: dict[tuple[int, int], list[int]] = {}
        inv_t = index.inv_t.tolist()
        inv_r = index.inv_r.tolist()
        for v in range(index.n + 1):
            u = inv_t[v] + size
            w0 = inv_r[v] + size
            while u:
                w = w0
                while w:
                    key = (u, w)
                    lst = pairs.get(key)
                    if lst is None:
                        pairs[key] = [v]
                    else:
                        lst.append(v)
                    w >>= 1
                u >>= 1
        self.pairs = pairs

    def canonical(self, lo: int, hi: int) -> list[int]:
        """Decompose [lo, hi) into disjoint canonical segment node ids."""
        res = []
        l = lo + self.tree_size
        r = hi + self.tree_size
        while l < r:
            if l & 1:
                res.append(l)
                l += 1
            if r & 1:
                r -= 1
                res.append(r)
            l >>= 1
            r >>= 1
        return res

    def query(self, rt: SaRange, rr: SaRange) -> list[int]:
        segs_t = self.canonical(rt.lo, rt.hi)
        segs_r = self.canonical(rr.lo, rr.hi)
        out = []
        pairs = self.pairs
        empty = ()
        for u in segs_t:
            for w in segs_r:
                out.extend(pairs.get((u, w), empty))
        out.sort()
        return out


class RootIntersector(Intersector):
    """Block decomposition with b ~ n^(1/3) blocks per side: block pairs are
    precomputed, elements hanging out of full blocks go through the inverse
    arrays (R-side partials only against the T full-block span, so nothing
    is counted twice)."""

    kind = "root"

    def __init__(self, index: SuffixIndex):
        super().__init__(index)
        n = index.n
        self.b = max(1, round(n ** (1 / 3)))
        self.w = -(-self._n1 // self.b)  # ceil
        nb = -(-self._n1 // self.w)
        table: list[list[list[int]]] = [[[] for _ in range(nb)] for _ in range(nb)]
        inv_t = index.inv_t.tolist()
        inv_r = index.inv_r.tolist()
        w = self.w
        for v in range(n + 1):
            table[inv_t[v] // w][inv_r[v] // w].append(v)
        self.table = table
        self._sa_t = index.sa_t.tolist()
        self._labels_r = index.labels_r.tolist()
        self._inv_t = inv_t
        self._inv_r = inv_r

    def _full_blocks(self, lo: int, hi: int) -> tuple[int, int]:
        """Block index range [fa, fb) fully inside [lo, hi)."""
        w = self.w
        fa = -(-lo // w)
        fb = hi // w
        return (fa, fb) if fa < fb else (0, 0)

    def query(self, rt: SaRange, rr: SaRange) -> list[int]:
        w = self.w
        fa, fb = self._full_blocks(rt.lo, rt.hi)
        fc, fd = self._full_blocks(rr.lo, rr.hi)
        out = []
        table = self.table
        for a in range(fa, fb):
            row = table[a]
            for c in range(fc, fd):
                out.extend(row[c])
        # ranks of rt outside its full blocks, tested against all of rr
        sa_t, inv_r, k, l = self._sa_t, self._inv_r, rr.lo, rr.hi
        span_lo, span_hi = fa * w, fb * w
        if fa == fb:
            span_lo = span_hi = rt.lo  # no full span at all
        for r in range(rt.lo, min(span_lo, rt.hi)):
            v = sa_t[r]
            if k <= inv_r[v] < l:
                out.append(v)
        for r in range(max(span_hi, rt.lo), rt.hi):
            v = sa_t[r]
            if k <= inv_r[v] < l:
                out.append(v)
        # ranks of rr outside its full blocks, tested only against the full
        # span of rt (its partials were fully handled above)
        labels_r, inv_t = self._labels_r, self._inv_t
        rspan_lo, rspan_hi = fc * w, fd * w
        if fc == fd:
            rspan_lo = rspan_hi = rr.lo
        if fa < fb:
            for s in range(rr.lo, min(rspan_lo, rr.hi)):
                v = labels_r[s]
                if span_lo <= inv_t[v] < span_hi:
                    out.append(v)
            for s in range(max(rspan_hi, rr.lo), rr.hi):
                v = labels_r[s]
                if span_lo <= inv_t[v] < span_hi:
                    out.append(v)
        out.sort()
        return out


class InstantIntersector(Intersector):
    """Every (T-range, R-range) quadruple answered by direct table reads.

    Per R-range (k, l) the table stores the T-ranks whose value falls in it
    (kept sorted while l grows one step at a time, so each extension looks
    at one new element) together with dense cumulative counts over T-rank
    space; an (i, j) lookup is then two count reads and one slice.  Build
    cost grows so steeply with n that a hard cap guards it.
    """

    kind = "instant"

    def __init__(self, index: SuffixIndex, n_max: int = DEFAULT_INSTANT_CAP):
        super().__init__(index)
        if index.n > n_max:
            raise TooLargeForInstant(
                f"n={index.n} exceeds the instant-table cap {n_max}"
            )
        self.n_max = n_max
        N = self._n1
        sa_np = np.asarray(index.sa_t)
        # order[x] = T-rank whose value has R-rank x
        order = np.argsort(np.asarray(index.inv_r)[sa_np]).tolist()
        ramp = np.arange(N + 1)
        table: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}
        for k in range(N):
            rs: list[int] = []
            for l in range(k + 1, N + 1):
                insort(rs, order[l - 1])
                rs_arr = np.array(rs, dtype=np.int64)
                table[(k, l)] = (sa_np[rs_arr], np.searchsorted(rs_arr, ramp))
        self.table = table

    def query(self, rt: SaRange, rr: SaRange) -> list[int]:
        vals, counts = self.table[(rr.lo, rr.hi)]
        out = vals[counts[rt.lo] : counts[rt.hi]]
        return sorted(out.tolist())


_BUILDERS = {
    "instant": InstantIntersector,
    "log": LogIntersector,
    "root": RootIntersector,
    "inverse": InverseIntersector,
}


def build_intersector(
    kind: str, index: SuffixIndex, instant_cap: int = DEFAULT_INSTANT_CAP
) -> Intersector:
    if kind not in _BUILDERS:
        raise ValueError(f"unknown intersector kind {kind!r}; choose from {KINDS}")
    if kind == "instant":
        return InstantIntersector(index, n_max=instant_cap)
    return _BUILDERS[kind](index)

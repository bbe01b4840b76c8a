import random

import pytest
from hypothesis import given, settings, strategies as st

from cpmx import (
    Text,
    build_index,
    build_intersector,
    ecpm,
    naive_ecpm,
    random_dna,
    rotation_string,
)
from cpmx.errors import EmptyPattern, IndexMismatch, PatternTooLong
from cpmx.intersect import KINDS


class TestRotationString:
    def test_identity(self):
        assert rotation_string(b"banana", 0) == b"banana"

    def test_first(self):
        assert rotation_string(b"banana", 1) == b"ananab"

    def test_swap(self):
        assert rotation_string(b"ab", 1) == b"ba"

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            rotation_string(b"ab", 2)


class TestNaive:
    def test_banana_ana(self):
        assert naive_ecpm(b"banana", b"ana") == [(1, 0), (3, 0)]

    def test_pattern_too_long(self):
        with pytest.raises(PatternTooLong):
            naive_ecpm(b"abc", b"abcd")

    def test_whole_text(self):
        assert naive_ecpm(b"x", b"x") == [(0, 0)]

    def test_empty_pattern(self):
        with pytest.raises(EmptyPattern):
            naive_ecpm(b"abc", b"")


class TestEcpm:
    def test_banana_nana(self, banana_index):
        x = build_intersector("inverse", banana_index)
        assert ecpm(banana_index, x, b"nana") == [(1, 1), (1, 3), (2, 0), (2, 2)]

    def test_banana_ban(self, banana_index):
        x = build_intersector("log", banana_index)
        assert ecpm(banana_index, x, b"ban") == [(0, 0)]

    def test_all_a_dedup(self):
        idx = build_index(Text(b"aaaa"))
        x = build_intersector("inverse", idx)
        occs = ecpm(idx, x, b"aa", dedup=True)
        assert [o.start for o in occs] == [0, 1, 2]

    def test_errors(self, banana_index):
        x = build_intersector("inverse", banana_index)
        with pytest.raises(EmptyPattern):
            ecpm(banana_index, x, b"")
        with pytest.raises(PatternTooLong):
            ecpm(banana_index, x, b"bananana")

    def test_index_mismatch(self, banana_index):
        other = build_index(Text(b"ananab"))
        x = build_intersector("inverse", other)
        with pytest.raises(IndexMismatch):
            ecpm(banana_index, x, b"an")

    def test_occurrences_verify_by_substring(self):
        rng = random.Random(5)
        for trial in range(30):
            n = rng.randint(4, 150)
            t = random_dna(n, trial)
            idx = build_index(t)
            x = build_intersector("inverse", idx)
            m = rng.randint(1, min(10, n))
            s = rng.randint(0, n - m)
            pattern = t.data[s : s + m]
            for start, rot in ecpm(idx, x, pattern):
                assert 0 <= start <= n - m
                assert t.data[start : start + m] == rotation_string(pattern, rot)

    def test_periodic_pattern_multiplicity(self):
        # P = Q repeated t times: each matching start carries t rotations
        idx = build_index(Text(b"xabababy"))
        x = build_intersector("root", idx)
        occs = ecpm(idx, x, b"abab")
        starts = {}
        for start, rot in occs:
            starts.setdefault(start, []).append(rot)
        assert all(len(set(rots)) == 2 for rots in starts.values())
        assert occs == naive_ecpm(b"xabababy", b"abab")


class TestOracleEquivalence:
    def test_random_dna_all_kinds(self):
        rng = random.Random(77)
        for trial in range(60):
            n = rng.randint(2, 150)
            t = random_dna(n, 1000 + trial)
            idx = build_index(t)
            m = rng.randint(1, min(20, n))
            if rng.random() < 0.5:
                s = rng.randint(0, n - m)
                pattern = t.data[s : s + m]
            else:
                pattern = bytes(rng.choice(b"ACGT") for _ in range(m))
            want = naive_ecpm(t.data, pattern)
            for kind in KINDS:
                x = build_intersector(kind, idx)
                assert ecpm(idx, x, pattern) == want

    @settings(max_examples=60, deadline=None)
    @given(
        data=st.text(alphabet="abc", min_size=1, max_size=60).map(str.encode),
        pattern=st.text(alphabet="abc", min_size=1, max_size=8).map(str.encode),
    )
    def test_hypothesis_small_alphabet(self, data, pattern):
        if len(pattern) > len(data):
            return
        idx = build_index(Text(data))
        want = naive_ecpm(data, pattern)
        for kind in ("log", "root", "inverse"):
            assert ecpm(idx, build_intersector(kind, idx), pattern) == want

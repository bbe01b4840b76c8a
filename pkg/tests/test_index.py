import random

import numpy as np
import pytest

from cpmx import (
    SaRange,
    Side,
    Text,
    build_index,
    find_range,
    load_index,
    random_dna,
    save_index,
)
from cpmx.errors import CorruptIndex


def ref_suffix_array(data: bytes):
    """Comparison-sort oracle over all suffixes of data + sentinel."""
    full = data + b"\x00"
    return sorted(range(len(full)), key=lambda s: full[s:])


class TestBuild:
    def test_banana_sa(self, banana_index):
        assert banana_index.sa_t.tolist() == [6, 5, 3, 1, 0, 4, 2]

    def test_banana_labels(self, banana_index):
        assert banana_index.labels_r.tolist() == [0, 2, 4, 6, 1, 3, 5]

    def test_single_symbol(self):
        idx = build_index(Text(b"a"))
        assert idx.sa_t.tolist() == [1, 0]
        assert idx.labels_r.tolist() == [0, 1]

    def test_matches_comparison_sort(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(1, 500)
            data = bytes(rng.choice(b"ACGT") for _ in range(n))
            idx = build_index(Text(data))
            assert idx.sa_t.tolist() == ref_suffix_array(data)
            rev_sa = ref_suffix_array(data[::-1])
            assert idx.labels_r.tolist() == [n - s for s in rev_sa]

    def test_inverse_permutations(self):
        for seed in range(20):
            idx = build_index(random_dna(random.Random(seed).randint(1, 300), seed))
            ranks = np.arange(idx.n + 1)
            assert (idx.inv_t[idx.sa_t] == ranks).all()
            assert (idx.inv_r[idx.labels_r] == ranks).all()

    def test_suffixes_strictly_increasing(self):
        data = b"mississippi"
        idx = build_index(Text(data))
        full = data + b"\x00"
        suffixes = [full[s:] for s in idx.sa_t]
        assert suffixes == sorted(suffixes)
        assert len(set(suffixes)) == len(suffixes)

    def test_label_completes_prefix(self):
        # the rev-suffix labeled L, reversed, spells T[0..L)
        data = b"banana"
        idx = build_index(Text(data))
        rev = data[::-1]
        for rank, label in enumerate(idx.labels_r.tolist()):
            assert rev[idx.n - label :][::-1] == data[:label]


class TestFindRange:
    def test_t_side_ana(self, banana_index):
        r = find_range(banana_index, Side.T, b"ana")
        assert (r.lo, r.hi) == (2, 4)
        assert sorted(banana_index.sa_t[r.lo : r.hi].tolist()) == [1, 3]

    def test_r_side_na(self, banana_index):
        r = find_range(banana_index, Side.R, b"na")
        assert (r.lo, r.hi) == (5, 7)
        assert sorted(banana_index.labels_r[r.lo : r.hi].tolist()) == [3, 5]

    def test_empty_pattern_full_range(self, banana_index):
        for side in (Side.T, Side.R):
            r = find_range(banana_index, side, b"")
            assert (r.lo, r.hi) == (0, 7)

    def test_absent_pattern(self, banana_index):
        assert find_range(banana_index, Side.T, b"zzz").empty

    def test_agrees_with_linear_scan(self):
        rng = random.Random(23)
        for _ in range(500):
            n = rng.randint(1, 200)
            data = bytes(rng.choice(b"ab") for _ in range(n))
            idx = build_index(Text(data))
            m = rng.randint(1, 6)
            pattern = bytes(rng.choice(b"abc") for _ in range(m))
            for side, base in ((Side.T, data), (Side.R, data[::-1])):
                full = base + b"\x00"
                starts = (
                    idx.sa_t
                    if side is Side.T
                    else np.array([n - l for l in idx.labels_r])
                )
                expect = {
                    r
                    for r in range(n + 1)
                    if full[starts[r] :].startswith(pattern)
                }
                got = find_range(idx, side, pattern)
                assert set(range(got.lo, got.hi)) == expect


class TestSaRange:
    def test_width_and_empty(self):
        assert SaRange(2, 2, Side.T).empty
        assert SaRange(1, 5, Side.R).width == 4

    def test_invalid(self):
        with pytest.raises(ValueError):
            SaRange(3, 1, Side.T)


class TestPersistence:
    def test_round_trip(self, tmp_path, banana_index):
        path = tmp_path / "banana.idx"
        save_index(banana_index, path)
        loaded = load_index(path)
        assert loaded.n == banana_index.n
        for name in ("sa_t", "labels_r", "inv_t", "inv_r"):
            assert getattr(loaded, name).tolist() == getattr(banana_index, name).tolist()

    def test_loaded_index_queries_after_attach(self, tmp_path, banana_index):
        path = tmp_path / "banana.idx"
        save_index(banana_index, path)
        loaded = load_index(path, text=Text(b"banana"))
        r = find_range(loaded, Side.T, b"ana")
        assert (r.lo, r.hi) == (2, 4)

    def test_truncated(self, tmp_path, banana_index):
        path = tmp_path / "banana.idx"
        save_index(banana_index, path)
        path.write_bytes(path.read_bytes()[:-5])
        with pytest.raises(CorruptIndex):
            load_index(path)

    def test_bad_magic(self, tmp_path, banana_index):
        path = tmp_path / "banana.idx"
        save_index(banana_index, path)
        blob = path.read_bytes()
        path.write_bytes(b"NOPE" + blob[4:])
        with pytest.raises(CorruptIndex):
            load_index(path)

    def test_version_mismatch(self, tmp_path, banana_index):
        path = tmp_path / "banana.idx"
        save_index(banana_index, path)
        blob = bytearray(path.read_bytes())
        blob[4] = 99
        path.write_bytes(bytes(blob))
        with pytest.raises(CorruptIndex):
            load_index(path)

    def test_flipped_payload_byte(self, tmp_path, banana_index):
        path = tmp_path / "banana.idx"
        save_index(banana_index, path)
        blob = bytearray(path.read_bytes())
        blob[20] ^= 0xFF
        path.write_bytes(bytes(blob))
        with pytest.raises(CorruptIndex):
            load_index(path)

import pytest

from cpmx import Text, build_index


@pytest.fixture(scope="session")
def banana_index():
    return build_index(Text(b"banana"))


def brute_common(index, rt, rr):
    """Independent oracle: plain set intersection of the raw array slices."""
    t_vals = set(index.sa_t[rt.lo : rt.hi].tolist())
    r_vals = set(index.labels_r[rr.lo : rr.hi].tolist())
    return sorted(t_vals & r_vals)

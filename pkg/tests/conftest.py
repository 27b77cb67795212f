import os
import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from polychrome import _kernels, core, matroids

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def tier() -> str:
    """POLYCHROME_TEST_TIER=quick trims the big sweeps; default is full."""
    return os.environ.get("POLYCHROME_TEST_TIER", "full")


@pytest.fixture(scope="session")
def matroid_pool_3():
    return list(_kernels.enumerate_matroid_tables(3, 3))


@pytest.fixture(scope="session")
def matroid_pool_4():
    return list(_kernels.enumerate_matroid_tables(4, 4))


@st.composite
def polymatroid_tables(draw, max_n=4, max_parts=3):
    """Random valid tables built as sums of uniform matroids, optionally
    truncated or inflated; validity is by construction."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    parts = draw(st.integers(min_value=0, max_value=max_parts))
    p = core.zero_polymatroid(n)
    for _ in range(parts):
        members = draw(st.integers(min_value=0, max_value=(1 << n) - 1))
        r = draw(st.integers(min_value=0, max_value=max(members.bit_count(), 0)))
        p = core.sum_of([p, matroids.uniform(r, members, n)])
    if draw(st.booleans()) and p.total_rank > 0:
        s = draw(st.integers(min_value=0, max_value=p.total_rank))
        p = p.truncate(s)
    if draw(st.booleans()):
        k = p.min_k()
        p = p.inflate(k, k + draw(st.integers(min_value=0, max_value=2)))
    return p


@st.composite
def raw_tables(draw, max_n=3, max_value=4):
    """Arbitrary integer tables (mostly invalid) for axiom-scan testing."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    values = draw(
        st.lists(
            st.integers(min_value=-1, max_value=max_value),
            min_size=1 << n,
            max_size=1 << n,
        )
    )
    return tuple(values), n

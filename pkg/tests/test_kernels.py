"""Kernel semantics against brute-force oracles, and pure vs compiled lockstep."""
import pytest
from hypothesis import given

from conftest import polymatroid_tables, raw_tables
from oracles import brute_is_matroid, brute_is_polymatroid, naive_matroid_tables

from polychrome import _kernels
from polychrome._kernels import pure

BACKENDS = [pure]
if _kernels.BACKEND == "cython":
    from polychrome._kernels import _speedups

    BACKENDS.append(_speedups)


@pytest.mark.parametrize("impl", BACKENDS)
class TestAgainstBruteForce:
    @given(raw_tables())
    def test_violation_matches_full_axiom_scan(self, impl, case):
        table, n = case
        assert (impl.polymatroid_violation(table, n) is None) == (
            brute_is_polymatroid(table, n)
        )

    @given(polymatroid_tables())
    def test_valid_constructions_accepted(self, impl, p):
        assert impl.polymatroid_violation(p.rank, p.n) is None

    @given(polymatroid_tables())
    def test_unit_increase_matches_brute(self, impl, p):
        assert impl.is_unit_increase(p.rank, p.n) == brute_is_matroid(p.rank, p.n)


def test_violation_witnesses_are_real():
    # witness masks must exhibit the failed axiom literally
    for table, n in [
        ((0, 1, 1, 3), 2),
        ((0, 2, 0, 1, 1, 2, 2, 2), 3),
        ((1, 1), 1),
        ((0, -1), 1),
    ]:
        hit = pure.polymatroid_violation(table, n)
        assert hit is not None
        kind, a, b = hit
        if kind == "normalized":
            assert table[0] != 0
        elif kind == "negative":
            assert table[a] < 0
        elif kind == "monotone":
            assert a | b == b and table[a] > table[b]
        else:
            assert table[a | b] + table[a & b] > table[a] + table[b]


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_matroid_enumeration_matches_independent_generator(n):
    ours = _kernels.enumerate_matroid_tables(n, n)
    assert list(ours) == naive_matroid_tables(n, n)


def test_matroid_enumeration_rank_cap():
    capped = _kernels.enumerate_matroid_tables(3, 1)
    assert capped == [t for t in _kernels.enumerate_matroid_tables(3, 3) if t[-1] <= 1]


def test_matroid_enumeration_lex_order_and_stability():
    a = _kernels.enumerate_matroid_tables(4, 4)
    b = _kernels.enumerate_matroid_tables(4, 4)
    assert a == b
    assert sorted(a) == list(a)
    assert len(set(a)) == len(a)


def test_polymatroid_enumeration_matches_brute_filter():
    size = 1 << 2
    brute = []

    def rec(prefix):
        if len(prefix) == size:
            if brute_is_polymatroid(prefix, 2) and prefix[-1] <= 3:
                brute.append(tuple(prefix))
            return
        for v in range(4):
            rec(prefix + [v])

    rec([0])
    assert _kernels.enumerate_polymatroid_tables(2, 3) == sorted(brute)


def test_polymatroid_enumeration_includes_matroids():
    polys = set(_kernels.enumerate_polymatroid_tables(3, 3))
    for t in _kernels.enumerate_matroid_tables(3, 3):
        assert t in polys


@pytest.mark.parametrize("impl", BACKENDS)
def test_subtract_if_valid(impl):
    rho = (0, 2, 2, 3)
    assert impl.subtract_if_valid(rho, (0, 1, 1, 2), 2) == (0, 1, 1, 1)
    assert impl.subtract_if_valid(rho, (0, 1, 1, 1), 2) == (0, 1, 1, 2)
    # non-monotone difference
    assert impl.subtract_if_valid((0, 1, 1, 1), (0, 0, 0, 1), 2) is None
    # negative difference
    assert impl.subtract_if_valid((0, 1, 1, 1), (0, 2, 0, 2), 2) is None


@pytest.mark.parametrize("impl", BACKENDS)
def test_pointwise_filters(impl):
    tables = [(0, 0, 0, 0), (0, 1, 1, 2), (0, 2, 2, 3)]
    assert impl.pointwise_le((0, 1, 1, 2), (0, 2, 2, 3))
    assert not impl.pointwise_le((0, 2, 2, 3), (0, 1, 1, 2))
    assert impl.filter_pointwise_le(tables, (0, 1, 1, 2)) == tables[:2]


@pytest.mark.skipif(_kernels.BACKEND != "cython", reason="extension not built")
class TestBackendsAgree:
    def test_enumeration(self):
        for n in range(5):
            assert pure.enumerate_matroid_tables(n, n) == list(
                _speedups.enumerate_matroid_tables(n, n)
            )
        assert pure.enumerate_polymatroid_tables(3, 4) == list(
            _speedups.enumerate_polymatroid_tables(3, 4)
        )

    @given(raw_tables())
    def test_violations(self, case):
        table, n = case
        assert pure.polymatroid_violation(table, n) == _speedups.polymatroid_violation(
            table, n
        )

    @given(polymatroid_tables(max_n=3), polymatroid_tables(max_n=3))
    def test_subtraction(self, a, b):
        if a.n != b.n:
            return
        assert pure.subtract_if_valid(a.rank, b.rank, a.n) == _speedups.subtract_if_valid(
            a.rank, b.rank, a.n
        )

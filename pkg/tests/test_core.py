"""Ground types and the rank-table operations, against spec examples and
the brute-force oracles."""
import itertools

import pytest
from hypothesis import given

from conftest import polymatroid_tables
from oracles import brute_connectivity_blocks, brute_is_polymatroid

from polychrome import core, matroids
from polychrome.core import (
    GroundSet,
    NotMonotone,
    NotNormalized,
    NotSubmodular,
    Polymatroid,
    apply_permutation,
    connectivity_split,
    diagnose_table,
    isomorphic,
    validate,
    zero_polymatroid,
)
from polychrome.gallery import vamos_like


def u(r, members, n):
    return matroids.uniform(r, members, n)


class TestGroundSet:
    def test_names_validated(self):
        GroundSet(2, ("a", "b"))
        with pytest.raises(ValueError):
            GroundSet(2, ("a", "a"))
        with pytest.raises(ValueError):
            GroundSet(2, ("a",))

    def test_labels(self):
        g = GroundSet(2, ("x", "y"))
        assert g.label(1) == "y"
        assert GroundSet(2).label(1) == "1"


class TestValidate:
    def test_inflated_pair_table_is_valid(self):
        p = validate([0, 2, 2, 3], 2)
        assert p.rank == (0, 2, 2, 3)

    def test_not_normalized(self):
        with pytest.raises(NotNormalized):
            validate([1, 1], 1)

    def test_not_submodular_with_witness(self):
        with pytest.raises(NotSubmodular) as err:
            validate([0, 1, 1, 3], 2)
        assert (err.value.a, err.value.b) == (1, 2)

    def test_not_monotone_witness(self):
        with pytest.raises(NotMonotone) as err:
            validate([0, 1, 1, 0], 2)
        assert err.value.a | err.value.b == err.value.b

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            validate([0, 1], 2)

    @given(polymatroid_tables())
    def test_accepts_exactly_the_brute_force_language(self, p):
        assert diagnose_table(p.rank, p.n) is None
        assert brute_is_polymatroid(p.rank, p.n)


class TestPredicates:
    def test_k_polymatroid(self):
        from polychrome.gallery import boolean_cycle

        b = boolean_cycle(4).polymatroid
        assert b.is_k_polymatroid(2)
        assert not b.is_k_polymatroid(1)
        single3 = validate([0, 3], 1)
        assert not single3.is_k_polymatroid(2)
        assert zero_polymatroid(3).is_k_polymatroid(0)

    def test_is_matroid(self):
        assert u(2, 0b111, 3).is_matroid()
        assert not validate([0, 2], 1).is_matroid()
        assert not validate([0, 1, 2, 2], 2).is_matroid()


class TestMinors:
    def test_contract_vamos(self):
        v = vamos_like(2, 4).polymatroid
        c = v.contract([0])  # remaining elements b, c, d -> 0, 1, 2
        assert c.singleton_ranks() == (1, 1, 2)
        assert c.total_rank == 2

    def test_delete_nothing(self):
        v = vamos_like(2, 4).polymatroid
        assert v.delete(0).rank == v.rank

    def test_contract_everything(self):
        v = vamos_like(2, 4).polymatroid
        assert v.contract(v.full_mask).rank == (0,)

    def test_names_follow_elements(self):
        v = vamos_like(2, 4).polymatroid
        assert v.delete([1]).ground.names == ("a", "c", "d")

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            u(1, 0b11, 2).delete([5])

    @given(polymatroid_tables(max_n=4))
    def test_delete_contract_commute(self, p):
        full = p.full_mask
        for a in range(1 << p.n):
            for b in range(1 << p.n):
                if a & b or (a | b) == full and p.n == 0:
                    continue
                left = p.delete(a).contract(core._compact_mask(b, full ^ a))
                right = p.contract(b).delete(core._compact_mask(a, full ^ b))
                assert left.rank == right.rank
                assert left.rank == p.minor(a, b).rank

    @given(polymatroid_tables(max_n=4))
    def test_minors_stay_valid(self, p):
        for a in range(1 << p.n):
            assert diagnose_table(p.delete(a).rank, p.n - a.bit_count()) is None
            assert diagnose_table(p.contract(a).rank, p.n - a.bit_count()) is None


class TestSumsAndTransforms:
    def test_direct_sum_of_coloops(self):
        s = u(1, 0b1, 1).direct_sum(u(1, 0b1, 1))
        assert s.rank == (0, 1, 1, 2)

    def test_direct_sum_zero_identity(self):
        p = vamos_like(2, 4).polymatroid
        assert p.direct_sum(zero_polymatroid(0)).rank == p.rank

    def test_truncate(self):
        p = vamos_like(2, 4).polymatroid
        assert p.truncate(p.total_rank).rank == p.rank
        assert p.truncate(0).rank == (0,) * 16
        with pytest.raises(ValueError):
            p.truncate(5)

    def test_truncate_boolean_c5(self):
        from polychrome.gallery import boolean_cycle

        b = boolean_cycle(5).polymatroid
        t = b.truncate(4)
        assert t.total_rank == 4
        for a in range(1 << 5):
            assert t.rank[a] == min(b.rank[a], 4)

    def test_dual_example_from_uniform_sum(self):
        rho = core.sum_of([u(1, 0b11, 2), u(2, 0b11, 2)])
        assert rho.rank == (0, 2, 2, 3)
        assert rho.i_dual(2).rank == core.sum_of(
            [u(1, 0b11, 2), u(0, 0, 2)]
        ).rank

    def test_dual_of_quotient_excluded_swaps(self):
        p = validate([0, 1, 2, 2], 2)
        assert p.i_dual(2).rank == (0, 2, 1, 2)

    def test_matroid_dual_specialization(self):
        m = u(1, 0b111, 3)
        assert m.i_dual(1).rank == u(2, 0b111, 3).rank

    def test_dual_requires_k_bound(self):
        with pytest.raises(ValueError):
            validate([0, 3], 1).i_dual(2)

    @given(polymatroid_tables(max_n=4))
    def test_dual_involution_and_minor_exchange(self, p):
        i = max(p.min_k(), 1)
        d = p.i_dual(i)
        assert diagnose_table(d.rank, p.n) is None
        assert d.is_k_polymatroid(i)
        assert d.i_dual(i).rank == p.rank
        for a in range(1 << p.n):
            assert p.delete(a).i_dual(i).rank == d.contract(a).rank
            assert p.contract(a).i_dual(i).rank == d.delete(a).rank

    def test_inflate_vamos_family(self):
        base = vamos_like(2, 4).polymatroid
        for k in (3, 4):
            assert base.inflate(2, k).rank == vamos_like(k, 4 * k - 4).polymatroid.rank
        assert base.inflate(2, 2).rank == base.rank

    def test_inflate_zero(self):
        z = zero_polymatroid(2)
        assert z.inflate(0, 2).rank == tuple(2 * s.bit_count() for s in range(4))

    def test_inflate_rejects_shrinking(self):
        with pytest.raises(ValueError):
            vamos_like(2, 4).polymatroid.inflate(2, 1)

    def test_dual_class_shift(self):
        # the j-dual of an i-polymatroid adds (j - i)|X| to the i-dual
        p = validate([0, 1, 2, 2], 2)
        i, j = 2, 4
        lhs = p.i_dual(j)
        rhs = p.i_dual(i)
        assert lhs.rank == tuple(
            rhs.rank[s] + (j - i) * s.bit_count() for s in range(4)
        )


class TestIsomorphism:
    def test_identity(self):
        p = vamos_like(2, 4).polymatroid
        assert isomorphic(p, p) == (0, 1, 2, 3)

    def test_swap(self):
        p = validate([0, 1, 2, 2], 2)
        q = validate([0, 2, 1, 2], 2)
        assert isomorphic(p, q) == (1, 0)
        assert apply_permutation(q, (1, 0)).rank == p.rank

    def test_none(self):
        assert isomorphic(u(1, 0b11, 2), u(2, 0b11, 2)) is None

    def test_lexicographically_least_witness(self):
        z = zero_polymatroid(3)
        assert isomorphic(z, z) == (0, 1, 2)


class TestConnectivity:
    def test_direct_sum_blocks(self):
        p = u(1, 0b11, 2).direct_sum(u(1, 0b1, 1))
        assert connectivity_split(p) == [0b011, 0b100]

    def test_vamos_connected(self):
        assert connectivity_split(vamos_like(2, 4).polymatroid) == [0b1111]

    def test_zero_splits_completely(self):
        assert connectivity_split(zero_polymatroid(3)) == [1, 2, 4]

    @given(polymatroid_tables(max_n=4))
    def test_matches_brute_partition_search(self, p):
        if p.n == 0:
            assert connectivity_split(p) == []
            return
        assert connectivity_split(p) == brute_connectivity_blocks(p.rank, p.n)

    @given(polymatroid_tables(max_n=4))
    def test_rank_shortcut_equivalence(self, p):
        # a bipartition satisfies the defining equation for every subset
        # iff it satisfies the single rank identity at the top
        if p.n < 2:
            return
        full = p.full_mask
        for x in range(1, full):
            if not x & 1:
                continue
            comp = full ^ x
            shortcut = p.rank[x] + p.rank[comp] == p.rank[full]
            equation = all(
                p.rank[a] == p.rank[a & x] + p.rank[a & comp]
                for a in range(1 << p.n)
            )
            assert shortcut == equation


def test_sum_of_requires_common_ground():
    with pytest.raises(core.GroundSetMismatch):
        core.sum_of([u(1, 0b1, 1), u(1, 0b11, 2)])

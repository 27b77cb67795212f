import itertools

import pytest

from polychrome import core, matroids
from polychrome.gallery import affine_plane, boolean_cycle, boolean_path, projective_plane
from polychrome.graphs import colorings, coloring_stats
from polychrome.hyper import (
    ExtractionError,
    INDECOMPOSABLE,
    PreconditionError,
    UNKNOWN,
    build_polymatroid,
    check_T,
    check_properties,
    coloring_to_decomposition,
    decomposition_to_coloring,
    hypergraph,
    line_graph,
    recover_hypergraph,
    truncation_coloring_bound,
    weight_of,
    weights,
)


class TestHypergraphType:
    def test_rejects_empty_edges(self):
        with pytest.raises(ValueError):
            hypergraph(2, [0b00])

    def test_strictness(self):
        with pytest.raises(ValueError):
            hypergraph(2, [0b01, 0b01])
        h = hypergraph(2, [0b01, 0b01], strict=False)
        assert h.edge_count == 2

    def test_weights(self):
        h = hypergraph(3, [0b011, 0b110])
        assert weights(h) == [1, 2, 1]
        assert weight_of(h, 0b111) == 4


class TestProperties:
    def test_c5_stars_satisfy_all(self):
        flags = check_properties(boolean_cycle(5).hypergraph)
        assert (flags.h1, flags.h2, flags.h3) == (True, True, True)

    def test_c3_stars_fail_h3(self):
        flags = check_properties(boolean_cycle(3).hypergraph)
        assert flags.h1 and flags.h2
        assert not flags.h3

    def test_path_stars(self):
        # every edge of a simple graph sits in exactly two vertex stars
        flags = check_properties(boolean_path(4).hypergraph)
        assert flags.h1 and flags.h2 and flags.h3

    def test_h1_fails_with_a_private_vertex(self):
        flags = check_properties(hypergraph(3, [0b011, 0b110, 0b100]))
        assert not flags.h1

    def test_affine_thresholds(self):
        for q in (2, 3):
            item = affine_plane(q)
            h = item.hypergraph
            m = h.edge_count
            size = q + 1
            legal = {
                t
                for t in range(size + 1)
                if check_T(h, (t,) * m)
            }
            assert legal == {1, q}

    def test_projective_thresholds(self):
        h = projective_plane(2).hypergraph
        legal = {t for t in range(4) if check_T(h, (t,) * h.edge_count)}
        assert legal == {1}


class TestBuild:
    def test_boolean_c3_table(self):
        p = boolean_cycle(3).polymatroid
        assert p.singleton_ranks() == (2, 2, 2)
        assert all(p.rank[a] == 3 for a in range(1 << 3) if a.bit_count() >= 2)

    def test_affine2_parameters(self):
        item = affine_plane(2)
        assert item.polymatroid.n == 6
        assert item.hypergraph.edge_count == 4
        assert item.polymatroid.total_rank == 4
        assert item.polymatroid.singleton_ranks() == (2,) * 6

    def test_zero_thresholds(self):
        h = hypergraph(3, [0b011, 0b110])
        assert build_polymatroid(h, (0, 0)).rank == (0,) * 8

    def test_equals_uniform_sum(self):
        h = hypergraph(4, [0b0111, 0b1100, 0b1000])
        t = (2, 1, 1)
        built = build_polymatroid(h, t)
        parts = [matroids.uniform(ti, x, 4) for ti, x in zip(t, h.edges)]
        assert built.rank == core.sum_of(parts).rank

    def test_within_hyperedge_rank_formula(self):
        # inside one hyperedge: rank is min(w(A), w(A) - |A| + t) when all
        # thresholds are positive and H2 holds
        for item, t in [(boolean_cycle(5), None), (affine_plane(2), None)]:
            h = item.hypergraph
            th = item.thresholds
            p = item.polymatroid
            for ti, x in zip(th, h.edges):
                sub = x
                while True:
                    a = sub
                    wa = weight_of(h, a)
                    assert p.rank[a] == min(wa, wa - a.bit_count() + ti)
                    if sub == 0:
                        break
                    sub = (sub - 1) & x

    def test_pair_rank_rule(self):
        # rank{e,f} = w{e,f} - 1 exactly when a threshold-one hyperedge
        # holds both, else the full weight
        for item in (boolean_cycle(5), affine_plane(2)):
            h, th, p = item.hypergraph, item.thresholds, item.polymatroid
            for e, f in itertools.combinations(range(h.n), 2):
                pair = (1 << e) | (1 << f)
                together = [
                    i for i, x in enumerate(h.edges)
                    if x & pair == pair and th[i] == 1
                ]
                assert len(together) <= 1
                delta = 1 if together else 0
                assert p.rank[pair] == weight_of(h, pair) - delta


class TestLineGraph:
    def test_stars_reproduce_the_graph(self):
        from polychrome.graphs import cycle_graph

        g = cycle_graph(5)
        item = boolean_cycle(5)
        assert line_graph(item.hypergraph).edges == g.edges

    def test_affine_line_graph_complete(self):
        lg = line_graph(affine_plane(2).hypergraph)
        assert len(lg.edges) == 6

    def test_disjoint_edges(self):
        h = hypergraph(4, [0b0011, 0b1100])
        assert line_graph(h).edges == ()


class TestColoringToDecomposition:
    def test_path_star_example(self):
        # path on three vertices: two edges, stars {e1}, {e1,e2}, {e2}
        item = boolean_path(3)
        h, t = item.hypergraph, item.thresholds
        assert h.edges == (0b01, 0b11, 0b10)
        parts = coloring_to_decomposition(h, t, (0, 1, 0), 2)
        assert parts[0].rank == (0, 1, 1, 2)
        assert parts[1].rank == (0, 1, 1, 1)

    def test_rejects_improper(self):
        item = boolean_cycle(5)
        with pytest.raises(ValueError):
            coloring_to_decomposition(item.hypergraph, item.thresholds, (0,) * 5, 2)

    def test_injective_colors_give_single_blocks(self):
        item = boolean_cycle(4)
        h, t = item.hypergraph, item.thresholds
        parts = coloring_to_decomposition(h, t, (0, 1, 2, 3), 4)
        for i, p in enumerate(parts):
            assert p.rank == matroids.uniform(1, h.edges[i], h.n).rank

    def test_sums_to_construction(self):
        item = boolean_cycle(5)
        h, t = item.hypergraph, item.thresholds
        for c in colorings(line_graph(h), 3):
            parts = coloring_to_decomposition(h, t, c, 3)
            assert core.sum_of(parts).rank == item.polymatroid.rank


class TestDecompositionToColoring:
    def test_round_trip_c5(self):
        item = boolean_cycle(5)
        h, t = item.hypergraph, item.thresholds
        for k in (3, 4):
            for c in colorings(line_graph(h), k):
                parts = coloring_to_decomposition(h, t, c, k)
                back, stats = decomposition_to_coloring(h, t, parts)
                assert back == c
                assert item.polymatroid.total_rank >= stats.c1 + 2 * stats.c2plus

    def test_round_trip_with_singleton_hyperedges(self):
        item = boolean_path(4)
        h, t = item.hypergraph, item.thresholds
        for k in (2, 3):
            for c in colorings(line_graph(h), k):
                parts = coloring_to_decomposition(h, t, c, k)
                back, _ = decomposition_to_coloring(h, t, parts)
                assert back == c

    def test_affine_injective_coloring_stats(self):
        item = affine_plane(2)
        h, t = item.hypergraph, item.thresholds
        c = (0, 1, 2, 3)
        parts = coloring_to_decomposition(h, t, c, 4)
        back, stats = decomposition_to_coloring(h, t, parts)
        assert back == c
        assert (stats.c1, stats.c2plus) == (4, 0)

    def test_h3_failure_rejected(self):
        item = boolean_cycle(3)
        h, t = item.hypergraph, item.thresholds
        parts = (
            matroids.uniform(1, 0b111, 3),
            matroids.uniform(2, 0b111, 3),
        )
        with pytest.raises(PreconditionError):
            decomposition_to_coloring(h, t, parts)

    def test_sum_mismatch_rejected(self):
        item = boolean_cycle(5)
        h, t = item.hypergraph, item.thresholds
        parts = (matroids.uniform(1, 0b11111, 5),) * 2
        with pytest.raises(PreconditionError):
            decomposition_to_coloring(h, t, parts)


class TestRecover:
    def test_c5_stars_come_back(self):
        item = boolean_cycle(5)
        h, t = item.hypergraph, item.thresholds
        c = colorings(line_graph(h), 3)[0]
        parts = coloring_to_decomposition(h, t, c, 3)
        assert sorted(recover_hypergraph(parts).edges) == sorted(h.edges)

    def test_single_matroid(self):
        got = recover_hypergraph([matroids.uniform(1, 0b111, 3)])
        assert got.edges == (0b111,)

    def test_zero_parts_contribute_nothing(self):
        got = recover_hypergraph(
            [matroids.uniform(1, 0b011, 2), core.zero_polymatroid(2)]
        )
        assert got.edges == (0b011,)


class TestTruncationBound:
    def test_c5_rank_four_indecomposable(self):
        item = boolean_cycle(5)
        verdict = truncation_coloring_bound(item.hypergraph, 4, 5)
        assert verdict.verdict == INDECOMPOSABLE
        assert verdict.min_weight == 5

    def test_trivial_truncation_unknown(self):
        item = boolean_cycle(5)
        assert truncation_coloring_bound(item.hypergraph, 5, 5).verdict == UNKNOWN

    def test_below_floor_errors(self):
        item = boolean_cycle(5)
        with pytest.raises(ValueError):
            truncation_coloring_bound(item.hypergraph, 3, 5)

    def test_h3_required(self):
        item = boolean_cycle(3)
        with pytest.raises(PreconditionError):
            truncation_coloring_bound(item.hypergraph, 2, 5)

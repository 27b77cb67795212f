"""Hypergraphs and the threshold construction they induce.

A hypergraph here has the polymatroid's ground set as its vertices and a
list of hyperedge masks.  Choosing a per-hyperedge threshold t_i in
0..|X_i| induces the polymatroid

    rank(A) = sum_i min(|A & X_i|, t_i),

the pointwise sum of the uniform matroids U_{t_i, X_i} padded with loops.
Under the structural properties H2, H3 and T, ordered decompositions of
that polymatroid into k matroids correspond one-to-one with proper
k-colorings of the hypergraph's line graph, and both directions of the
correspondence are implemented below.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from polychrome import core, matroids
from polychrome.core import (
    GroundSet,
    GroundSetMismatch,
    Polymatroid,
    PolychromeError,
    as_mask,
    mask_elements,
)
from polychrome.graphs import (
    Graph,
    chromatic_number_graph,
    coloring_stats,
    colorings,
    is_proper,
)

INDECOMPOSABLE = "indecomposable"
UNKNOWN = "unknown"


class PreconditionError(PolychromeError):
    """A structural hypothesis (H2/H3/T/strictness/agreement) fails."""


class ExtractionError(PolychromeError):
    """No consistent coloring can be read off the given decomposition."""


@dataclass(frozen=True)
class Hypergraph:
    """Vertices 0..n-1 with a list of nonempty hyperedge masks.

    In strict mode (a hypergraph proper) the hyperedges are pairwise
    distinct; multi-hypergraph mode permits duplicates but is accepted only
    by ``build_polymatroid`` and ``line_graph``.
    """

    ground: GroundSet
    edges: tuple[int, ...]
    strict: bool = True

    def __post_init__(self):
        n = self.ground.size
        for x in self.edges:
            if x == 0:
                raise ValueError("hyperedges must be nonempty")
            if x < 0 or x >= 1 << n:
                raise ValueError("hyperedge outside the ground set")
        if self.strict and len(set(self.edges)) != len(self.edges):
            raise ValueError("duplicate hyperedges need strict=False")

    @property
    def n(self) -> int:
        return self.ground.size

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def hypergraph(n: int, edges, strict: bool = True, names=None) -> Hypergraph:
    """Build a hypergraph from masks or element iterables."""
    masks = tuple(as_mask(x, n) for x in edges)
    return Hypergraph(GroundSet(n, tuple(names) if names else None), masks, strict)


def weights(h: Hypergraph) -> list[int]:
    """w(e) = number of hyperedges containing each vertex."""
    w = [0] * h.n
    for x in h.edges:
        for e in mask_elements(x):
            w[e] += 1
    return w


def weight_of(h: Hypergraph, subset) -> int:
    a = as_mask(subset, h.n)
    return sum((a & x).bit_count() for x in h.edges)


@dataclass(frozen=True)
class PropertyFlags:
    h1: bool
    h2: bool
    h3: bool


def check_properties(h: Hypergraph) -> PropertyFlags:
    """H1: every vertex in at least two hyperedges.  H2: two hyperedges
    share at most one vertex.  H3: no three hyperedges form the pattern
    {a,b}, {a,c}, {b,c}."""
    w = weights(h)
    h1 = all(x >= 2 for x in w)
    h2 = all(
        (a & b).bit_count() <= 1
        for a, b in itertools.combinations(h.edges, 2)
    )
    pairs = [x for x in h.edges if x.bit_count() == 2]
    h3 = True
    for x, y, z in itertools.combinations(pairs, 3):
        if x ^ y == z:  # {a,b},{a,c},{b,c} in any pairing
            h3 = False
            break
    return PropertyFlags(h1, h2, h3)


def check_thresholds(h: Hypergraph, t) -> tuple[int, ...]:
    t = tuple(int(v) for v in t)
    if len(t) != h.edge_count:
        raise ValueError("one threshold per hyperedge required")
    for ti, x in zip(t, h.edges):
        if not 0 <= ti <= x.bit_count():
            raise ValueError(f"threshold {ti} outside 0..|X|={x.bit_count()}")
    return t


def check_T(h: Hypergraph, t) -> bool:
    """Property T: each t_i is 1, or min{w(e): e in X_i} <= t_i < |X_i|."""
    t = check_thresholds(h, t)
    w = weights(h)
    for ti, x in zip(t, h.edges):
        if ti == 1:
            continue
        min_w = min(w[e] for e in mask_elements(x))
        if not min_w <= ti < x.bit_count():
            return False
    return True


def build_polymatroid(h: Hypergraph, t) -> Polymatroid:
    """rank(A) = sum_i min(|A & X_i|, t_i)."""
    t = check_thresholds(h, t)
    n = h.n
    table = [0] * (1 << n)
    for ti, x in zip(t, h.edges):
        if ti == 0:
            continue
        for a in range(1 << n):
            table[a] += min((a & x).bit_count(), ti)
    out = Polymatroid(h.ground, tuple(table))
    parts = [matroids.uniform(ti, x, n) for ti, x in zip(t, h.edges)]
    if parts and core.sum_of(parts).rank != out.rank:
        raise RuntimeError("threshold table disagrees with the uniform sum")
    return out


def line_graph(h: Hypergraph) -> Graph:
    """Graph on hyperedge indices; i ~ j when the hyperedges intersect."""
    es = [
        (i, j)
        for i, j in itertools.combinations(range(h.edge_count), 2)
        if h.edges[i] & h.edges[j]
    ]
    return Graph(h.edge_count, tuple(es))


def coloring_to_decomposition(h: Hypergraph, t, c, k: int):
    """The ordered k-tuple of matroids induced by a proper line-graph
    coloring: part i is the direct sum of U_{t_h, X_h} over hyperedges of
    color i, padded with loops.  Colors are 0..k-1."""
    t = check_thresholds(h, t)
    c = tuple(int(v) for v in c)
    if len(c) != h.edge_count:
        raise ValueError("one color per hyperedge required")
    if any(not 0 <= v < k for v in c):
        raise ValueError("color out of range")
    if not is_proper(line_graph(h), c):
        raise ValueError("coloring is not proper on the line graph")
    n = h.n
    parts = []
    for i in range(k):
        table = [0] * (1 << n)
        for hh in range(h.edge_count):
            if c[hh] != i or t[hh] == 0:
                continue
            x = h.edges[hh]
            for a in range(1 << n):
                table[a] += min((a & x).bit_count(), t[hh])
        parts.append(Polymatroid(h.ground, tuple(table)))
    return tuple(parts)


def _submasks(m: int):
    sub = m
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & m


def _agreement_masks(h: Hypergraph, t) -> set[int]:
    """Subsets on which a decomposed polymatroid must agree with the
    threshold construction for coloring extraction to be licensed."""
    n = h.n
    need = {a for a in range(1 << n) if a.bit_count() <= 3}
    ones = [i for i, ti in enumerate(t) if ti == 1]
    if len(ones) >= 3:
        for a in range(1 << n):
            if a.bit_count() != 4:
                continue
            elems = mask_elements(a)
            for tri in itertools.combinations(ones, 3):
                counts = sorted(
                    sum(1 for i in tri if h.edges[i] >> e & 1) for e in elems
                )
                if counts == [1, 2, 2, 2]:
                    need.add(a)
                    break
    for ti, x in zip(t, h.edges):
        for a in _submasks(x):
            if a.bit_count() <= ti + 1:
                need.add(a)
    for i, j in itertools.combinations(range(h.edge_count), 2):
        xi, xj = h.edges[i], h.edges[j]
        if not xi & xj:
            continue
        for a in _submasks(xi ^ xj):
            if (a & xi).bit_count() <= t[i] and (a & xj).bit_count() <= t[j]:
                need.add(a)
    return need


def _restriction_is_uniform(part: Polymatroid, x: int, t: int) -> bool:
    for a in _submasks(x):
        if part.rank[a] != min(a.bit_count(), t):
            return False
    return True


def decomposition_to_coloring(h: Hypergraph, t, parts):
    """Read a proper line-graph coloring off an ordered tuple of matroids
    whose sum agrees with the threshold construction on the required
    subset families.  Returns (coloring, ColoringStats).

    Multi-element hyperedges are colored first (the unique part whose
    restriction is the uniform U_{t_h, X_h}), then singleton hyperedges in
    index order by the set-difference rule; uniqueness is checked at every
    step and failures signal a sum mismatch.
    """
    if not h.strict:
        raise PreconditionError("coloring extraction needs strict mode")
    t = check_thresholds(h, t)
    flags = check_properties(h)
    if not flags.h2 or not flags.h3:
        raise PreconditionError("properties H2 and H3 are required")
    if not check_T(h, t):
        raise PreconditionError("property T fails for these thresholds")
    parts = tuple(parts)
    if not parts:
        raise ValueError("need at least one part")
    n = h.n
    for p in parts:
        if p.n != n:
            raise GroundSetMismatch("part on the wrong ground set")
        if not p.is_matroid():
            raise PreconditionError("every part must be a matroid")
    sigma = core.sum_of(parts)
    rho = build_polymatroid(h, t)
    for a in sorted(_agreement_masks(h, t)):
        if sigma.rank[a] != rho.rank[a]:
            raise PreconditionError(
                f"sum disagrees with the construction on subset {a}"
            )
    k = len(parts)
    color: dict[int, int] = {}
    for hh in range(h.edge_count):
        x = h.edges[hh]
        if x.bit_count() <= 1:
            continue
        hits = [
            i for i, p in enumerate(parts)
            if _restriction_is_uniform(p, x, t[hh])
        ]
        if len(hits) != 1:
            raise ExtractionError(
                f"hyperedge {hh}: {len(hits)} uniform restrictions, need 1"
            )
        color[hh] = hits[0]
    for hh in range(h.edge_count):
        x = h.edges[hh]
        if x.bit_count() != 1:
            continue
        e = x.bit_length() - 1
        positive = {i for i, p in enumerate(parts) if p.rank[x] == 1}
        used = {
            color[s]
            for s in range(h.edge_count)
            if (h.edges[s] >> e) & 1 and h.edges[s].bit_count() > 1
        }
        free = sorted(positive - used)
        if len(free) != 1:
            raise ExtractionError(
                f"singleton hyperedge {hh}: {len(free)} candidate parts, need 1"
            )
        color[hh] = free[0]
    c = tuple(color[hh] for hh in range(h.edge_count))
    if not is_proper(line_graph(h), c):
        raise ExtractionError("extracted assignment is not a proper coloring")
    stats = coloring_stats(c)
    if sigma.total_rank < stats.c1 + 2 * stats.c2plus:
        raise ExtractionError("total rank below the coloring weight bound")
    return c, stats


def recover_hypergraph(parts, strict: bool = True) -> Hypergraph:
    """Hyperedges of the source hypergraph, read off a decomposition:
    drop each part's loops, then take the ground sets of its connected
    components.  The result is sorted canonically."""
    parts = tuple(parts)
    if not parts:
        raise ValueError("need at least one part")
    n = parts[0].n
    out = []
    for p in parts:
        matroids.ensure_matroid(p)
        for block in core.connectivity_split(p):
            if p.rank[block] > 0:
                out.append(block)
    out.sort()
    ground = parts[0].ground
    return Hypergraph(ground, tuple(out), strict)


@dataclass(frozen=True)
class TruncationVerdict:
    verdict: str  # INDECOMPOSABLE or UNKNOWN
    reason: str
    min_weight: int | None = None  # least c1 + 2*c2plus seen, when computed


def truncation_coloring_bound(
    h: Hypergraph, s: int, k_max: int
) -> TruncationVerdict:
    """Indecomposability verdict for the truncation to rank s of the
    all-thresholds-one construction on h.

    Any k-decomposition of the truncation induces a proper line-graph
    coloring with c1 + 2*c2plus <= s, so if every coloring (over an
    exhaustive color budget) exceeds s the truncation is indecomposable.
    Since c1 + 2*c2plus is at least the number of classes used, colorings
    with min(s, #hyperedges) colors are exhaustive.
    """
    flags = check_properties(h)
    if not flags.h2 or not flags.h3:
        raise PreconditionError("properties H2 and H3 are required")
    t = (1,) * h.edge_count
    rho = build_polymatroid(h, t)
    if s >= rho.total_rank:
        return TruncationVerdict(UNKNOWN, "truncation equals the source")
    w = weights(h)
    star_case = all(x == 2 for x in w) and h.strict
    floor_general = max(
        rho.rank[a] for a in range(1 << h.n) if a.bit_count() <= 4
    )
    floor = min(floor_general, 4) if star_case else floor_general
    if s < floor:
        raise ValueError(f"truncation rank {s} below the supported floor {floor}")
    g = line_graph(h)
    chi = chromatic_number_graph(g)
    if chi > k_max:
        return TruncationVerdict(
            UNKNOWN, "line-graph chromatic number exceeds the color cap"
        )
    if s < chi:
        return TruncationVerdict(
            INDECOMPOSABLE, "truncation rank below the line-graph chromatic number"
        )
    k_eff = min(s, h.edge_count)
    if k_eff > k_max:
        return TruncationVerdict(UNKNOWN, "color cap below the exhaustive budget")
    best = min(
        st.c1 + 2 * st.c2plus
        for st in (coloring_stats(c) for c in colorings(g, k_eff))
    )
    if best > s:
        return TruncationVerdict(
            INDECOMPOSABLE,
            "every proper coloring weighs more than the truncation rank",
            best,
        )
    return TruncationVerdict(UNKNOWN, "a light enough coloring exists", best)

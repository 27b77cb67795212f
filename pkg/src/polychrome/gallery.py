"""Named constructions: Boolean polymatroids of graphs, finite planes,
the four-element indecomposable family, paving pairs, quotient excluded
minors, and friends.

Each constructor returns a GalleryItem carrying the polymatroid, its
hypergraph provenance when there is one, and the facts the construction
promises (tagged "stated"); the tests re-derive every stated fact with the
search engines.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from polychrome import core, matroids
from polychrome.core import Polymatroid
from polychrome.graphs import Graph, cycle_graph, path_graph
from polychrome.hyper import Hypergraph, build_polymatroid, hypergraph
from polychrome.polynomial import RationalPoly


@dataclass(frozen=True)
class Fact:
    name: str
    value: object
    tag: str  # "stated" for promised values, "computed" otherwise


@dataclass(frozen=True)
class GalleryItem:
    name: str
    params: tuple
    polymatroid: Polymatroid
    hypergraph: Hypergraph | None = None
    thresholds: tuple[int, ...] | None = None
    facts: tuple[Fact, ...] = field(default_factory=tuple)

    def fact(self, name: str):
        for f in self.facts:
            if f.name == name:
                return f.value
        raise KeyError(name)


def boolean_of_graph(g: Graph, name: str = "boolean") -> GalleryItem:
    """The rank-|V(X)| polymatroid of a loopless graph: hyperedges are the
    vertex stars over the edge set, all thresholds one."""
    stars = [0] * g.v
    for idx, (a, b) in enumerate(g.edges):
        stars[a] |= 1 << idx
        stars[b] |= 1 << idx
    if any(s == 0 for s in stars):
        raise ValueError("isolated vertices have empty stars")
    h = hypergraph(len(g.edges), stars)
    t = (1,) * g.v
    p = build_polymatroid(h, t)
    facts = (Fact("total_rank", g.v, "stated"),)
    return GalleryItem(name, (g.v, g.edges), p, h, t, facts)


def boolean_cycle(n: int) -> GalleryItem:
    return boolean_of_graph(cycle_graph(n), "boolean-cycle")


def boolean_path(n: int) -> GalleryItem:
    """Boolean polymatroid of the path on n vertices."""
    return boolean_of_graph(path_graph(n), "boolean-path")


def _require_prime(q: int):
    if q < 2 or any(q % d == 0 for d in range(2, int(math.isqrt(q)) + 1)):
        raise ValueError(f"order {q} not supported (prime orders only)")


def affine_plane(q: int) -> GalleryItem:
    """Plane of order q over the prime field: the ground set is the q^2+q
    lines, one hyperedge per point (the pencil of lines through it), all
    thresholds one.  The line graph is complete on q^2 vertices."""
    _require_prime(q)
    points = [(x, y) for x in range(q) for y in range(q)]
    pt_index = {pt: i for i, pt in enumerate(points)}
    lines = []
    for m in range(q):
        for b in range(q):
            lines.append(tuple(sorted(pt_index[(x, (m * x + b) % q)] for x in range(q))))
    for x0 in range(q):
        lines.append(tuple(sorted(pt_index[(x0, y)] for y in range(q))))
    lines.sort()
    pencils = []
    for i in range(len(points)):
        mask = 0
        for j, line in enumerate(lines):
            if i in line:
                mask |= 1 << j
        pencils.append(mask)
    h = hypergraph(len(lines), pencils)
    t = (1,) * len(points)
    p = build_polymatroid(h, t)
    facts = (
        Fact("ground_size", q * q + q, "stated"),
        Fact("hyperedge_count", q * q, "stated"),
        Fact("hyperedge_size", q + 1, "stated"),
        Fact("chromatic_number", q * q, "stated"),
    )
    return GalleryItem("affine", (q,), p, h, t, facts)


def projective_plane(q: int) -> GalleryItem:
    """Plane of order q over the prime field: ground set the q^2+q+1
    points, one hyperedge per line, all thresholds one."""
    _require_prime(q)
    points = (
        [(1, a, b) for a in range(q) for b in range(q)]
        + [(0, 1, a) for a in range(q)]
        + [(0, 0, 1)]
    )
    points.sort()
    ptcount = len(points)
    masks = []
    for line in points:  # lines are dual to points: u.x + v.y + w.z = 0
        u, v, w = line
        mask = 0
        for i, (x, y, z) in enumerate(points):
            if (u * x + v * y + w * z) % q == 0:
                mask |= 1 << i
        masks.append(mask)
    masks.sort()
    h = hypergraph(ptcount, masks)
    t = (1,) * len(masks)
    p = build_polymatroid(h, t)
    facts = (
        Fact("ground_size", q * q + q + 1, "stated"),
        Fact("hyperedge_count", q * q + q + 1, "stated"),
        Fact("hyperedge_size", q + 1, "stated"),
        Fact("chromatic_number", q * q + q + 1, "stated"),
    )
    return GalleryItem("projective", (q,), p, h, t, facts)


def vamos_like(k: int, s: int) -> GalleryItem:
    """The four-element k-polymatroid with singleton ranks k, one pair of
    rank 2k, the other pairs 2k-1, triples 3k-2, and total rank s; an
    excluded minor for decomposability whenever 3k-2 <= s <= 4k-4."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if not 3 * k - 2 <= s <= 4 * k - 4:
        raise ValueError("s must lie in 3k-2 .. 4k-4")
    ad = 0b1001  # the high pair: elements 0 and 3
    table = []
    for x in range(16):
        c = x.bit_count()
        if c <= 1 or x == ad:
            table.append(k * c)
        elif c == 2:
            table.append(2 * k - 1)
        elif c == 3:
            table.append(3 * k - 2)
        else:
            table.append(s)
    p = core.validate(table, 4, names=("a", "b", "c", "d"))
    facts = (
        Fact("indecomposable", True, "stated"),
        Fact("chromatic_number", math.inf, "stated"),
    )
    return GalleryItem("vamos", (k, s), p, None, None, facts)


def two_parallel_pairs() -> Polymatroid:
    """Rank-2 matroid on four elements with parallel classes {0,1},{2,3}."""
    table = [
        min(1, (a & 0b0011).bit_count()) + min(1, (a & 0b1100).bit_count())
        for a in range(16)
    ]
    return core.validate(table, 4)


def paving_pair(m: Polymatroid) -> GalleryItem:
    """The sum of a paving matroid with the uniform matroid of its rank.

    Requires at least one cyclic hyperplane and that the proper nonempty
    cyclic flats are incomparable (automatic for paving matroids, whose
    only proper nonempty cyclic flats are the cyclic hyperplanes).  With s
    cyclic hyperplanes there are exactly 2**(s-1) two-part decompositions,
    the hyperplane-relaxation pairs.  When the paving matroid is connected
    those are all the decompositions and the chromatic polynomial is
    2**(s-1) x (x-1); a disconnected one admits split forms on top, so the
    closed form is attached only in the connected case.
    """
    matroids.ensure_matroid(m)
    r = m.total_rank
    for c in matroids.circuits(m):
        if c.bit_count() < r:
            raise ValueError("not paving: a circuit is smaller than the rank")
    hyperplanes = matroids.cyclic_hyperplanes(m)
    s = len(hyperplanes)
    if s < 1:
        raise ValueError("need at least one cyclic hyperplane")
    u = matroids.uniform(r, m.full_mask, m.n)
    p = core.sum_of([m, u])
    facts = [
        Fact("cyclic_hyperplanes", tuple(hyperplanes), "computed"),
        Fact("pair_decomposition_count", 2 ** (s - 1), "stated"),
    ]
    if core.is_connected(m):
        poly = RationalPoly([0, -1, 1]) * Fraction(2 ** (s - 1))
        facts.append(Fact("chromatic_polynomial", poly, "stated"))
    return GalleryItem("paving", (m.rank,), p, None, None, tuple(facts))


def paving_two_pairs() -> GalleryItem:
    return paving_pair(two_parallel_pairs())


def three_poly_example() -> GalleryItem:
    """The four-element 3-polymatroid with singleton rank 3, pair rank 5
    and rank 6 on everything larger; its chromatic polynomial is not a
    rational multiple of any graph's."""
    table = []
    for x in range(16):
        c = x.bit_count()
        table.append((0, 3, 5, 6, 6)[c])
    p = core.validate(table, 4, names=("a", "b", "c", "d"))
    poly = RationalPoly([0, 34, -49, 4, 18, -8, 1])
    facts = (
        Fact("chromatic_polynomial", poly, "stated"),
        Fact("graph_multiple", None, "stated"),
    )
    return GalleryItem("three-poly", (), p, None, None, facts)


def tree_example(n_a: int, n_b: int) -> GalleryItem:
    """Sum of three matroids on A|B|{c}: a rank-one circuit on A+c, one on
    B+c, and the free-ish uniform of rank n-2 on A+B; not a sum of two
    matroids, though every single-element minor is."""
    if n_a < 1 or n_b < 1:
        raise ValueError("both sides need at least one element")
    n = n_a + n_b + 1
    if n < 4:
        raise ValueError("need at least four elements")
    a_mask = (1 << n_a) - 1
    b_mask = ((1 << n_b) - 1) << n_a
    c_mask = 1 << (n - 1)
    parts = [
        matroids.uniform(1, a_mask | c_mask, n),
        matroids.uniform(1, b_mask | c_mask, n),
        matroids.uniform(n - 2, a_mask | b_mask, n),
    ]
    p = core.sum_of(parts)
    facts = (
        Fact("decomposition_parts", tuple(q.rank for q in parts), "stated"),
        Fact("chromatic_number", 3, "stated"),
        Fact("two_part_bound", n_a + n_b + 2, "stated"),
    )
    return GalleryItem("tree", (n_a, n_b), p, None, None, facts)


def quotient_excluded(a: int, b: int, c: int, k: int | None = None) -> GalleryItem:
    """The two-element table [0, b, c, a+c] that is minor-minimal outside
    the k-quotient class for every k >= c."""
    if not 0 <= a < b < c:
        raise ValueError("need 0 <= a < b < c")
    if k is not None and c > k:
        raise ValueError("c must not exceed k")
    p = core.validate([0, b, c, a + c], 2, names=("e", "f"))
    facts = (Fact("abc", (a, b, c), "stated"),)
    return GalleryItem("rho-a", (a, b, c), p, None, None, facts)


BUILDERS = {
    "boolean-cycle": (boolean_cycle, 1),
    "boolean-path": (boolean_path, 1),
    "affine": (affine_plane, 1),
    "projective": (projective_plane, 1),
    "vamos": (vamos_like, 2),
    "paving-2pairs": (paving_two_pairs, 0),
    "three-poly": (three_poly_example, 0),
    "tree": (tree_example, 2),
    "rho-a": (quotient_excluded, 3),
}


def build(name: str, params) -> GalleryItem:
    """CLI-facing dispatch: construct a gallery item by name with integer
    parameters."""
    if name not in BUILDERS:
        raise KeyError(f"unknown gallery item {name!r}")
    fn, arity = BUILDERS[name]
    params = [int(x) for x in params]
    if len(params) != arity:
        raise ValueError(f"{name} takes {arity} parameter(s)")
    return fn(*params)

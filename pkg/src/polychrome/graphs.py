"""Simple graphs: proper colorings, chromatic polynomials, criticality.

Chromatic polynomials come from deletion-contraction with multi-edge
collapsing after contraction, split over connected components, and memoized
on a relabeled edge-set key (vertices reordered by degree, ties by index).
The key determines the relabeled graph exactly, so cache hits only ever
equate isomorphic graphs and correctness never depends on the memo.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from polychrome.core import CapExceeded
from polychrome.polynomial import RationalPoly

GRAPH_CAP = 12
ENUM_CAP = 7


@dataclass(frozen=True)
class Graph:
    """Simple labeled graph: vertex count plus sorted (i, j) pairs, i < j."""

    v: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        norm = []
        for a, b in self.edges:
            if a == b:
                raise ValueError("loops are not allowed")
            if not (0 <= a < self.v and 0 <= b < self.v):
                raise ValueError("edge endpoint out of range")
            e = (a, b) if a < b else (b, a)
            if e in seen:
                raise ValueError("duplicate edge")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def adjacency(self) -> list[int]:
        adj = [0] * self.v
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj


@dataclass(frozen=True)
class ColoringStats:
    """Counts of color classes of size exactly one and of size at least two."""

    c1: int
    c2plus: int

    @property
    def colors_used(self) -> int:
        return self.c1 + self.c2plus


def coloring_stats(coloring) -> ColoringStats:
    sizes: dict[int, int] = {}
    for c in coloring:
        sizes[c] = sizes.get(c, 0) + 1
    c1 = sum(1 for s in sizes.values() if s == 1)
    return ColoringStats(c1, len(sizes) - c1)


def colorings(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All proper colorings [v] -> {0..k-1} in lexicographic order."""
    if k < 1:
        raise ValueError("k must be positive")
    adj = g.adjacency()
    below = [adj[u] & ((1 << u) - 1) for u in range(g.v)]
    out: list[tuple[int, ...]] = []
    color = [0] * g.v

    def rec(u):
        if u == g.v:
            out.append(tuple(color))
            return
        used = 0
        nb = below[u]
        while nb:
            b = nb & -nb
            nb ^= b
            used |= 1 << color[b.bit_length() - 1]
        for c in range(k):
            if not (used >> c) & 1:
                color[u] = c
                rec(u + 1)

    rec(0)
    return out


def is_proper(g: Graph, coloring) -> bool:
    coloring = list(coloring)
    if len(coloring) != g.v:
        return False
    return all(coloring[a] != coloring[b] for a, b in g.edges)


_poly_memo: dict[tuple, RationalPoly] = {}


def _canon_key(v: int, edges: frozenset) -> tuple:
    deg = [0] * v
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    order = sorted(range(v), key=lambda u: (deg[u], u))
    relabel = [0] * v
    for new, old in enumerate(order):
        relabel[old] = new
    es = tuple(sorted(
        (relabel[a], relabel[b]) if relabel[a] < relabel[b]
        else (relabel[b], relabel[a])
        for a, b in edges
    ))
    return (v, es)


def _components_of(v: int, edges: frozenset) -> list[tuple[int, frozenset]]:
    parent = list(range(v))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for u in range(v):
        groups.setdefault(find(u), []).append(u)
    out = []
    for verts in groups.values():
        index = {u: i for i, u in enumerate(verts)}
        es = frozenset(
            (min(index[a], index[b]), max(index[a], index[b]))
            for a, b in edges
            if a in index
        )
        out.append((len(verts), es))
    return out


def _chrompoly(v: int, edges: frozenset) -> RationalPoly:
    if not edges:
        return RationalPoly([0] * v + [1])  # x**v
    key = _canon_key(v, edges)
    hit = _poly_memo.get(key)
    if hit is not None:
        return hit
    comps = _components_of(v, edges)
    if len(comps) > 1:
        out = RationalPoly.one()
        for cv, ces in comps:
            out = out * _chrompoly(cv, ces)
    else:
        a, b = min(edges)
        deleted = _chrompoly(v, edges - {(a, b)})
        # contract b into a, drop parallel duplicates, compact indices
        def squash(u):
            if u == b:
                u = a
            return u if u < b else u - 1
        ces = frozenset(
            (min(squash(x), squash(y)), max(squash(x), squash(y)))
            for x, y in edges
            if (x, y) != (a, b) and squash(x) != squash(y)
        )
        out = deleted - _chrompoly(v - 1, ces)
    _poly_memo[key] = out
    return out


def chromatic_polynomial_graph(g: Graph) -> RationalPoly:
    """Monic degree-|V| polynomial counting proper k-colorings at each k."""
    if g.v > GRAPH_CAP:
        raise CapExceeded(f"chromatic polynomial capped at {GRAPH_CAP} vertices")
    return _chrompoly(g.v, frozenset(g.edges))


def chromatic_number_graph(g: Graph) -> int:
    """Least positive k admitting a proper k-coloring."""
    poly = chromatic_polynomial_graph(g)
    k = 1
    while poly.eval_int(k) == 0:
        k += 1
        if k > g.v + 1:
            raise RuntimeError("no chromatic number below |V|+1")
    return k


def is_critical(g: Graph) -> bool:
    """True when deleting any single edge lowers the chromatic number."""
    chi = chromatic_number_graph(g)
    for e in g.edges:
        rest = tuple(x for x in g.edges if x != e)
        if chromatic_number_graph(Graph(g.v, rest)) >= chi:
            return False
    return True


def enumerate_graphs(v: int):
    """All 2**C(v,2) simple graphs on v labeled vertices, in edge-bitmask
    order over the lexicographic slot list (0,1),(0,2),..."""
    if v > ENUM_CAP:
        raise CapExceeded(f"graph enumeration capped at v={ENUM_CAP}")
    slots = list(itertools.combinations(range(v), 2))
    for code in range(1 << len(slots)):
        yield Graph(
            v, tuple(s for i, s in enumerate(slots) if (code >> i) & 1)
        )


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    """Path on n vertices (n - 1 edges)."""
    if n < 1:
        raise ValueError("paths need at least 1 vertex")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))

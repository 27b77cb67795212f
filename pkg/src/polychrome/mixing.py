"""Mixing graphs for pairs of matroids on a common ground set.

The vertices are the subsets where the two rank functions disagree; edges
join nested vertices and vertices at symmetric-difference two (the latter
is an augmentation of the containment-plus-local rule that provably leaves
the components unchanged, and it simplifies the component logic).  Swapping
which matroid supplies the rank on a union of components yields every other
pair of matroids with the same rank-function sum, provided the sum is
connected.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from polychrome import core, matroids
from polychrome.core import (
    CapExceeded,
    GroundSetMismatch,
    Polymatroid,
    PolychromeError,
)

MIXING_CAP = 6


class MixingError(PolychromeError):
    pass


@dataclass(frozen=True)
class MixingGraph:
    """Disagreement subsets of two matroids with component structure."""

    n: int
    vertices: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    augmented: bool = True

    def edges(self, augmented: bool = True):
        """Edge list on the vertex masks; with augmented=False only the
        two defining rules (containment; symmetric difference two with
        both the union and the intersection agreeing) are used."""
        vset = set(self.vertices)
        out = []
        for a, b in itertools.combinations(self.vertices, 2):
            if a & b == a or a & b == b:
                out.append((a, b))
            elif (a ^ b).bit_count() == 2:
                if augmented or (
                    (a & b) not in vset and (a | b) not in vset
                ):
                    out.append((a, b))
        return out


def _check_pair(m1: Polymatroid, m2: Polymatroid):
    matroids.ensure_matroid(m1)
    matroids.ensure_matroid(m2)
    if m1.n != m2.n:
        raise GroundSetMismatch("mixing needs a common ground set")
    if m1.n > MIXING_CAP:
        raise CapExceeded(f"mixing graphs capped at n={MIXING_CAP}")


def mixing_graph(m1: Polymatroid, m2: Polymatroid) -> MixingGraph:
    _check_pair(m1, m2)
    n = m1.n
    r1, r2 = m1.rank, m2.rank
    verts = tuple(a for a in range(1 << n) if r1[a] != r2[a])
    index = {a: i for i, a in enumerate(verts)}
    parent = list(range(len(verts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in itertools.combinations(verts, 2):
        if a & b == a or a & b == b or (a ^ b).bit_count() == 2:
            ra, rb = find(index[a]), find(index[b])
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for a in verts:
        groups.setdefault(find(index[a]), []).append(a)
    comps = tuple(
        tuple(sorted(g)) for g in sorted(groups.values(), key=min)
    )
    return MixingGraph(n, verts, comps)


def mix(m1: Polymatroid, m2: Polymatroid, r_subsets):
    """The matroid pair obtained by keeping each matroid's own rank on the
    masks in ``r_subsets`` and swapping elsewhere.

    ``r_subsets`` must be a union of component vertex sets of the mixing
    graph (the matroid guarantee only covers those); the empty union swaps
    the pair outright.
    """
    g = mixing_graph(m1, m2)
    chosen = set(core.as_mask(x, m1.n) for x in r_subsets)
    covered: set[int] = set()
    for comp in g.components:
        cs = set(comp)
        if cs <= chosen:
            covered |= cs
        elif cs & chosen:
            raise MixingError("subsets must be a union of whole components")
    if chosen - covered:
        raise MixingError("subsets include non-vertices of the mixing graph")
    n = m1.n
    t1, t2 = [], []
    for a in range(1 << n):
        if a in covered:
            t1.append(m1.rank[a])
            t2.append(m2.rank[a])
        else:
            t1.append(m2.rank[a])
            t2.append(m1.rank[a])
    n1 = core.validate(t1, n)
    n2 = core.validate(t2, n)
    if not n1.is_matroid() or not n2.is_matroid():
        raise MixingError("mixed tables left the matroid regime")
    for a in range(1 << n):
        if n1.rank[a] + n2.rank[a] != m1.rank[a] + m2.rank[a]:
            raise MixingError("mixing broke the rank-sum identity")
    return n1, n2


def all_pair_decompositions(m1: Polymatroid, m2: Polymatroid):
    """All unordered matroid pairs with the same rank-function sum, one per
    component subset modulo complementation (complete whenever the sum is
    connected).  The canonical representative keeps the first component on
    the first matroid's side.  Pairs are deduplicated and sorted."""
    g = mixing_graph(m1, m2)
    comps = g.components
    pairs = {}
    if not comps:
        a, b = sorted([m1.rank, m2.rank])
        return [(matroids.wrap_table(a, m1.n), matroids.wrap_table(b, m1.n))]
    rest = comps[1:]
    for take in range(1 << len(rest)):
        chosen = list(comps[0])
        for i, comp in enumerate(rest):
            if (take >> i) & 1:
                chosen.extend(comp)
        n1, n2 = mix(m1, m2, chosen)
        key = tuple(sorted([n1.rank, n2.rank]))
        pairs.setdefault(key, (n1, n2))
    out = []
    for key in sorted(pairs):
        n1, n2 = pairs[key]
        if (n1.rank, n2.rank) != key:
            n1, n2 = n2, n1
        out.append((n1, n2))
    return out

"""Decompositions of a polymatroid into sums of matroid rank functions.

The search enumerates every multiset of positive-rank matroids whose rank
tables sum to the target, choosing parts in non-increasing lexicographic
table order so each multiset appears exactly once.  Pruning is sound and
lossless: a candidate part must fit under the residual pointwise and leave
a residual that is itself a valid polymatroid.  An optional accelerator
adds the parallel-class constraints that incidence sets impose on every
decomposition; both paths return identical results.

Everything chromatic is defined from the enumeration: the chromatic
polynomial collects one falling-factorial term per decomposition, divided
by the factorials of the part multiplicities, and the ordered count at k
is its exact evaluation.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from polychrome import _kernels, core, matroids
from polychrome.core import (
    GroundSetMismatch,
    Polymatroid,
    PolychromeError,
    mask_elements,
)
from polychrome.graphs import Graph, chromatic_polynomial_graph
from polychrome.polynomial import RationalPoly

DEFAULT_NODE_BUDGET = 10**8

INDECOMPOSABLE = "indecomposable"
UNKNOWN = "unknown"


class SearchIncomplete(PolychromeError):
    """The node budget ran out before the search space was exhausted."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search incomplete after {nodes} nodes")


@dataclass(frozen=True)
class Decomposition:
    """A multiset of positive-rank matroid tables on a common ground set,
    stored sorted ascending (lexicographic) so equal multisets compare
    equal."""

    n: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(sorted(self.parts)))

    def __len__(self):
        return len(self.parts)

    def multiplicities(self) -> list[int]:
        return [len(list(g)) for _, g in itertools.groupby(self.parts)]

    def sum_table(self) -> tuple[int, ...]:
        table = [0] * (1 << self.n)
        for t in self.parts:
            for s, r in enumerate(t):
                table[s] += r
        return tuple(table)

    def as_polymatroids(self) -> tuple[Polymatroid, ...]:
        return tuple(matroids.wrap_table(t, self.n) for t in self.parts)


@lru_cache(maxsize=None)
def _matroid_pool(n: int, r_max: int) -> tuple:
    """Positive-rank matroid tables on n elements, descending lex order."""
    tables = _kernels.enumerate_matroid_tables(n, r_max)
    positive = [t for t in tables if t[-1] > 0]
    positive.sort(reverse=True)
    return tuple(positive)


def _classify_candidate(table, accel_masks, n):
    """Host mask over the accelerator sets, or None when the candidate has
    two elements of some set parallel without hosting the whole set (such
    a part can appear in no decomposition)."""
    hosts = 0
    for idx, x in enumerate(accel_masks):
        elems = mask_elements(x)
        if table[x] == 1 and all(table[1 << e] == 1 for e in elems):
            hosts |= 1 << idx
            continue
        for e, f in itertools.combinations(elems, 2):
            pair = (1 << e) | (1 << f)
            if (
                table[pair] == 1
                and table[1 << e] == 1
                and table[1 << f] == 1
            ):
                return None
    return hosts


def _run_search(
    p: Polymatroid,
    max_parts,
    node_budget,
    incidence_accelerator: bool,
    first_only: bool,
):
    n = p.n
    rho = p.rank
    total = p.total_rank
    if max_parts is None:
        max_parts = total
    if node_budget is None:
        node_budget = DEFAULT_NODE_BUDGET
    zero = (0,) * (1 << n)
    if rho == zero:
        return [()]
    if max_parts < 1:
        return []

    pool = _kernels.filter_pointwise_le(list(_matroid_pool(n, total)), rho)
    host_of: dict = {}
    all_hosted = 0
    if incidence_accelerator:
        accel_masks = [s.mask for s in incidence_sets(p) if s.full]
        all_hosted = (1 << len(accel_masks)) - 1
        cands = []
        for t in pool:
            h = _classify_candidate(t, accel_masks, n)
            if h is not None:
                cands.append(t)
                host_of[t] = h
    else:
        cands = pool

    out = []
    nodes = 0
    chosen: list[tuple[int, ...]] = []
    subtract = _kernels.subtract_if_valid
    pw_filter = _kernels.filter_pointwise_le

    def rec(residual, cand_list, hosted):
        nonlocal nodes
        for idx, t in enumerate(cand_list):
            nodes += 1
            if nodes > node_budget:
                raise SearchIncomplete(nodes)
            hmask = host_of[t] if host_of else 0
            if hmask & hosted:
                continue
            new_res = subtract(residual, t, n)
            if new_res is None:
                continue
            chosen.append(t)
            if new_res == zero:
                if (hosted | hmask) == all_hosted:
                    d = Decomposition(n, tuple(chosen))
                    if d.sum_table() != rho:
                        raise RuntimeError("emitted parts do not re-sum")
                    out.append(d)
                    if first_only:
                        chosen.pop()
                        return True
            elif len(chosen) < max_parts:
                trimmed = pw_filter(cand_list[idx:], new_res)
                if rec(new_res, trimmed, hosted | hmask):
                    chosen.pop()
                    return True
            chosen.pop()
        return False

    rec(rho, cands, 0)
    out.sort(key=lambda d: d.parts)
    return out


def enumerate_decompositions(
    p: Polymatroid,
    max_parts: int | None = None,
    node_budget: int | None = None,
    incidence_accelerator: bool = False,
) -> list[Decomposition]:
    """Every multiset of positive-rank matroids summing to p, sorted.

    The zero polymatroid yields the single empty decomposition.  A part
    count of max_parts = rank(E) (the default) is always complete because
    each positive-rank part contributes at least one to the total rank.
    Raises SearchIncomplete when the node budget runs out; results are
    never silently truncated.
    """
    raw = _run_search(
        p, max_parts, node_budget, incidence_accelerator, first_only=False
    )
    if raw and raw[0] == ():
        return [Decomposition(p.n, ())]
    return raw


def is_decomposable(
    p: Polymatroid,
    max_parts: int | None = None,
    node_budget: int | None = None,
) -> bool:
    found = _run_search(p, max_parts, node_budget, False, first_only=True)
    return bool(found)


def chromatic_polynomial(
    p: Polymatroid,
    node_budget: int | None = None,
    incidence_accelerator: bool = False,
) -> RationalPoly:
    """Exact polynomial counting ordered k-tuples of matroids summing to p.

    One term per decomposition: the falling factorial of the part count
    divided by the factorials of the multiplicities.  The zero polymatroid
    gives the constant 1; an indecomposable input gives the zero polynomial.
    """
    out = RationalPoly.zero()
    for d in enumerate_decompositions(
        p, node_budget=node_budget, incidence_accelerator=incidence_accelerator
    ):
        denom = 1
        for m in d.multiplicities():
            denom *= math.factorial(m)
        out = out + RationalPoly.falling_factorial(len(d)) * Fraction(1, denom)
    return out


def chromatic_number(
    p: Polymatroid,
    node_budget: int | None = None,
):
    """Least number of matroids in any decomposition (1 for the zero
    polymatroid), or math.inf when no decomposition exists."""
    if p.is_zero():
        return 1
    for k in range(1, p.total_rank + 1):
        if is_decomposable(p, max_parts=k, node_budget=node_budget):
            return k
    return math.inf


def count_ordered(
    p: Polymatroid,
    k: int,
    node_budget: int | None = None,
) -> int:
    """Number of ordered k-tuples of matroids (zero parts allowed) whose
    rank functions sum to p; equals the chromatic polynomial at k."""
    if k < 1:
        raise ValueError("k must be positive")
    total = 0
    for d in enumerate_decompositions(p, node_budget=node_budget):
        i = len(d)
        if i > k:
            continue
        ways = math.perm(k, i)
        for m in d.multiplicities():
            ways //= math.factorial(m)
        total += ways
    return total


# -- incidence sets and the indecomposability certificate ------------------


@dataclass(frozen=True)
class IncidenceSet:
    """A subset whose size-2 and size-3 subsets all satisfy
    rank(Y) = 1 + sum over Y of (rank(e) - 1); ``full`` records whether the
    equation also holds for the set itself."""

    mask: int
    full: bool


def incidence_sets(p: Polymatroid) -> list[IncidenceSet]:
    """All inclusion-maximal incidence sets, ascending by mask."""
    n = p.n
    r = p.rank
    size = 1 << n
    ok = bytearray(size)
    for m in range(3, size):
        c = m.bit_count()
        if c < 2:
            continue
        if c == 2:
            e, f = mask_elements(m)
            ok[m] = r[m] == 1 + (r[1 << e] - 1) + (r[1 << f] - 1)
        elif c == 3:
            e, f, g = mask_elements(m)
            pairs_ok = (
                ok[(1 << e) | (1 << f)]
                and ok[(1 << e) | (1 << g)]
                and ok[(1 << f) | (1 << g)]
            )
            ok[m] = pairs_ok and r[m] == 1 + sum(
                r[1 << x] - 1 for x in (e, f, g)
            )
        else:
            good = True
            rem = m
            while rem:
                b = rem & -rem
                rem ^= b
                if not ok[m ^ b]:
                    good = False
                    break
            ok[m] = good
    out = []
    for m in range(size):
        if not ok[m]:
            continue
        if any(
            not m & (1 << e) and ok[m | (1 << e)] for e in range(n)
        ):
            continue
        full = r[m] == 1 + sum(r[1 << e] - 1 for e in mask_elements(m))
        out.append(IncidenceSet(m, full))
    return out


@dataclass(frozen=True)
class Certificate:
    """Outcome of the incidence-set constraint analysis.

    ``verdict`` is "indecomposable" only when two incidence sets overlap in
    two or more elements yet contain a rank-independent cross pair, which no
    decomposition of any size can satisfy.  ``two_part_rank_bound`` is a
    lower bound on the total rank of any decomposition with at most two
    positive-rank parts, so ``excludes_two_parts`` rules those out when the
    bound exceeds rank(E).  Unknown never implies decomposable.
    """

    verdict: str
    reason: str | None
    incidence: tuple[IncidenceSet, ...]
    conflict: tuple[int, int] | None
    forced_distinct: tuple[tuple[int, int], ...]
    two_part_rank_bound: int | None
    excludes_two_parts: bool


def indecomposability_certificate(p: Polymatroid) -> Certificate:
    r = p.rank
    sets = tuple(s for s in incidence_sets(p) if s.full)
    conflict = None
    forced: list[tuple[int, int]] = []
    for a, b in itertools.combinations(sets, 2):
        x, y = a.mask, b.mask
        if not x & y:
            continue
        separated = any(
            r[(1 << u) | (1 << v)] == r[1 << u] + r[1 << v]
            for u in mask_elements(x)
            for v in mask_elements(y)
            if u != v
        )
        if not separated:
            continue
        if (x & y).bit_count() >= 2:
            conflict = (x, y)
            break
        forced.append((x, y))
    bound = None
    if forced:
        bound = max(r[x] + r[y] - 2 for x, y in forced)
    if conflict is not None:
        return Certificate(
            INDECOMPOSABLE,
            "two incidence sets with an independent cross pair overlap in "
            "two or more elements",
            sets,
            conflict,
            tuple(forced),
            bound,
            True,
        )
    excludes_two = bound is not None and bound > p.total_rank
    return Certificate(
        UNKNOWN, None, sets, None, tuple(forced), bound, excludes_two
    )


# -- decomposition equivalence and preserving pairs -------------------------


def _split_parts(parts, n: int):
    out = []
    for t in parts:
        q = matroids.wrap_table(tuple(t), n)
        for block in core.connectivity_split(q):
            if q.rank[block] > 0:
                out.append(tuple(q.rank[a & block] for a in range(1 << n)))
    return out


def equivalence_canonical(d, n: int | None = None) -> Decomposition:
    """Canonical representative under the two equivalence moves: drop
    rank-zero parts and split every part into its positive connected
    components padded with loops, then sort.  Accepts a Decomposition or an
    iterable of raw tables (rank-zero tables permitted there)."""
    if isinstance(d, Decomposition):
        parts, n = d.parts, d.n
    else:
        parts = [tuple(t) for t in d]
        if n is None:
            raise ValueError("n is required for raw tables")
    return Decomposition(n, tuple(_split_parts(parts, n)))


def are_equivalent(d1: Decomposition, d2: Decomposition) -> bool:
    if d1.n != d2.n or d1.sum_table() != d2.sum_table():
        raise GroundSetMismatch("decompositions of different polymatroids")
    return equivalence_canonical(d1) == equivalence_canonical(d2)


def circuit_multiplicities(d: Decomposition) -> dict[int, int]:
    """How many parts have each multi-element subset as a circuit."""
    counts: dict[int, int] = {}
    for q in d.as_polymatroids():
        for c in matroids.circuits(q):
            if c.bit_count() > 1:
                counts[c] = counts.get(c, 0) + 1
    return counts


def is_preserving_pair(d1: Decomposition, d2: Decomposition) -> bool:
    """True when every multi-element subset is a circuit of as many parts
    in one decomposition as in the other."""
    if d1.n != d2.n or d1.sum_table() != d2.sum_table():
        raise GroundSetMismatch("decompositions of different polymatroids")
    return circuit_multiplicities(d1) == circuit_multiplicities(d2)


# -- duality transport -------------------------------------------------------


def dual_transport(parts, i: int):
    """Map an ordered tuple decomposing an i-polymatroid to one decomposing
    its i-dual: each part drops its loops, dualizes on the rest, and takes
    the loops back as loops.

    Requires every element to have rank exactly i in the sum (each element
    is then a non-loop of exactly i parts, which is what makes the images
    re-sum to the dual).  Under the additional condition that removing any
    single element never lowers the total rank, parts have no coloops, the
    map is an involution, and the two tuple sets are in bijection.
    """
    parts = tuple(parts)
    if not parts:
        raise ValueError("need at least one part")
    n = parts[0].n
    sigma = core.sum_of(parts)
    if any(r != i for r in sigma.singleton_ranks()):
        raise ValueError("every element must have rank exactly i in the sum")
    out = []
    for q in parts:
        matroids.ensure_matroid(q)
        loop_mask = matroids.loops(q)
        keep = q.full_mask ^ loop_mask
        restricted = q.delete(loop_mask)
        dualized = restricted.i_dual(1) if restricted.n else restricted
        kept = mask_elements(keep)
        table = [0] * (1 << n)
        for a in range(1 << n):
            small = 0
            for j, e in enumerate(kept):
                if (a >> e) & 1:
                    small |= 1 << j
            table[a] = dualized.rank[small]
        out.append(Polymatroid(q.ground, tuple(table)))
    check = core.sum_of(out)
    if check.rank != sigma.i_dual(i).rank:
        raise RuntimeError("transported parts do not re-sum to the dual")
    return tuple(out)


# -- graphs behind chromatic polynomials ------------------------------------


def graph_multiple_witness(poly: RationalPoly, v_max: int = 7):
    """A graph G and rational s with poly == s * (chromatic polynomial of
    G), or None.

    The scalar is forced: graph chromatic polynomials are monic of degree
    |V|, so s is the leading coefficient and |V| the degree; the quotient
    must then be a monic integer polynomial whose second coefficient pins
    the edge count, and the search runs over exactly the graphs with that
    many edges in canonical order.  The default vertex cap 7 is the
    practical limit; callers may raise it deliberately.
    """
    if poly.is_zero():
        return Graph(0, ()), Fraction(0)
    d = poly.degree
    if d > v_max:
        raise core.CapExceeded(f"degree {d} exceeds the vertex cap {v_max}")
    s = poly.leading
    q = poly * (1 / s)
    if not q.is_integral():
        return None
    if d == 0:
        return Graph(0, ()), s
    m = -q.coeff(d - 1)
    slots = list(itertools.combinations(range(d), 2))
    if m < 0 or m > len(slots):
        return None
    for combo in itertools.combinations(range(len(slots)), int(m)):
        g = Graph(d, tuple(slots[i] for i in combo))
        if chromatic_polynomial_graph(g) == q:
            return g, s
    return None

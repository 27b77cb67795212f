"""Matroid-specific structure on top of rank tables.

Circuits, loops/coloops, parallel classes, components, duals, cyclic
hyperplane relaxation, the quotient order, and the exhaustive enumeration
oracle that backs the decomposition search and the brute-force sweeps.
"""
from __future__ import annotations

from polychrome import _kernels
from polychrome.core import (
    CapExceeded,
    GroundSetMismatch,
    GroundSet,
    Polymatroid,
    PolychromeError,
    as_mask,
    connectivity_split,
    validate,
)

ENUM_CAP = 5  # practical cap for the public enumeration stream


class NotAMatroid(PolychromeError):
    pass


def ensure_matroid(p: Polymatroid) -> Polymatroid:
    if not p.is_matroid():
        raise NotAMatroid("rank table is not unit-increase")
    return p


def uniform(r: int, members, n: int, names=None) -> Polymatroid:
    """U_{r,S} on the members, direct-summed with loops everywhere else:
    rank(A) = min(|A & S|, r)."""
    s = as_mask(members, n)
    if not 0 <= r <= s.bit_count():
        raise ValueError(f"rank {r} outside 0..|S|={s.bit_count()}")
    table = tuple(min((a & s).bit_count(), r) for a in range(1 << n))
    return Polymatroid(GroundSet(n, tuple(names) if names else None), table)


def free_matroid(n: int) -> Polymatroid:
    return uniform(n, (1 << n) - 1, n)


def circuits(m: Polymatroid) -> list[int]:
    """Minimal dependent sets as masks, ascending.

    Each returned C has rank(C) = |C| - 1 and every C - e independent.
    """
    ensure_matroid(m)
    rank = m.rank
    out = []
    for c in range(1, 1 << m.n):
        k = c.bit_count()
        if rank[c] != k - 1:
            continue
        rem = c
        minimal = True
        while rem:
            e = rem & -rem
            rem ^= e
            if rank[c ^ e] != k - 1:
                minimal = False
                break
        if minimal:
            out.append(c)
    return out


def loops(m: Polymatroid) -> int:
    """Mask of rank-zero elements."""
    ensure_matroid(m)
    mask = 0
    for e in range(m.n):
        if m.rank[1 << e] == 0:
            mask |= 1 << e
    return mask


def coloops(m: Polymatroid) -> int:
    """Mask of elements in every basis: rank(E - e) = rank(E) - 1."""
    ensure_matroid(m)
    full = m.full_mask
    mask = 0
    for e in range(m.n):
        if m.rank[full ^ (1 << e)] == m.total_rank - 1:
            mask |= 1 << e
    return mask


def parallel_classes(m: Polymatroid) -> list[int]:
    """Partition of the non-loops into maximal sets of pairwise parallel
    elements (masks, ordered by least element)."""
    ensure_matroid(m)
    rank = m.rank
    nonloops = [e for e in range(m.n) if rank[1 << e] == 1]
    classes: list[int] = []
    for e in nonloops:
        for i, cls in enumerate(classes):
            rep = (cls & -cls).bit_length() - 1
            if rank[(1 << e) | (1 << rep)] == 1:
                classes[i] = cls | (1 << e)
                break
        else:
            classes.append(1 << e)
    return classes


def components(m: Polymatroid) -> list[int]:
    """Connected components (loops are singleton components)."""
    ensure_matroid(m)
    return connectivity_split(m)


def matroid_dual(m: Polymatroid) -> Polymatroid:
    """rank*(X) = |X| - rank(E) + rank(E - X); an involution."""
    ensure_matroid(m)
    return m.i_dual(1)


def is_flat(m: Polymatroid, subset) -> bool:
    a = as_mask(subset, m.n)
    r = m.rank[a]
    return all(
        m.rank[a | (1 << e)] > r for e in range(m.n) if not a & (1 << e)
    )


def cyclic_hyperplanes(m: Polymatroid) -> list[int]:
    """Hyperplanes (flats of rank r-1) that are unions of circuits,
    i.e. whose restriction has no coloop."""
    ensure_matroid(m)
    rank = m.rank
    top = m.total_rank
    out = []
    for h in range(1 << m.n):
        if rank[h] != top - 1 or not is_flat(m, h):
            continue
        rem = h
        cyclic = True
        while rem:
            e = rem & -rem
            rem ^= e
            if rank[h ^ e] != rank[h]:
                cyclic = False
                break
        if cyclic:
            out.append(h)
    return out


def relax(m: Polymatroid, hyperplane_subsets) -> Polymatroid:
    """Raise every r-subset of the chosen cyclic hyperplanes to a basis.

    Only the incomparable-cyclic-flat situation is supported: each chosen
    set must be a cyclic hyperplane of m, and the raised table must come
    out a matroid; anything else errors rather than silently corrupting.
    """
    ensure_matroid(m)
    chosen = [as_mask(h, m.n) for h in hyperplane_subsets]
    legal = set(cyclic_hyperplanes(m))
    for h in chosen:
        if h not in legal:
            raise ValueError(f"subset {h} is not a cyclic hyperplane")
    r = m.total_rank
    table = list(m.rank)
    for a in range(1 << m.n):
        if any((a & h).bit_count() >= r for h in chosen):
            table[a] = r
    out = validate(table, m.n, m.ground.names)
    if not out.is_matroid():
        raise NotAMatroid("relaxation left the unit-increase regime")
    return out


def enumerate_matroids(n: int, r_max: int):
    """Every matroid rank table on [n] with rank <= r_max, exactly once,
    in lexicographic table order.  Practical cap n <= 5; the internal
    kernel is reused uncapped by the decomposition engine."""
    if n > ENUM_CAP:
        raise CapExceeded(f"matroid enumeration capped at n={ENUM_CAP}")
    yield from _kernels.enumerate_matroid_tables(n, r_max)


def enumerate_polymatroids(n: int, rank_cap: int):
    """Every valid rank table on [n] with total rank <= rank_cap, in
    lexicographic table order.  Same practical cap as the matroid stream."""
    if n > ENUM_CAP:
        raise CapExceeded(f"polymatroid enumeration capped at n={ENUM_CAP}")
    yield from _kernels.enumerate_polymatroid_tables(n, rank_cap)


def is_quotient(q: Polymatroid, l: Polymatroid) -> bool:
    """True when rank_L - rank_Q is non-decreasing under inclusion,
    checked through single-element steps."""
    ensure_matroid(q)
    ensure_matroid(l)
    if q.n != l.n:
        raise GroundSetMismatch("quotient test needs a common ground set")
    rq, rl = q.rank, l.rank
    for x in range(1 << q.n):
        for e in range(q.n):
            b = 1 << e
            if x & b:
                continue
            if rq[x | b] - rq[x] > rl[x | b] - rl[x]:
                return False
    return True


def wrap_table(table, n: int) -> Polymatroid:
    """Wrap an already-trusted table (no re-validation)."""
    return Polymatroid(GroundSet(n), tuple(table))

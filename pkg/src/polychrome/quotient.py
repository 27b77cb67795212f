"""Quotient-chain decompositions recovered by the rank-jump recurrence.

A polymatroid is a k-quotient sum when it decomposes as M_1 + ... + M_k
with each M_{i+1} a quotient of M_i.  The chain, when it exists, is unique
and falls out of the recurrence that raises r_{M_i} across an element
exactly when the polymatroid's rank jumps by at least i there.  The
recurrence is well-defined iff the two-step chains through every pair of
elements commute, which is also exactly the absence of the two-element
excluded minors; failures are reported with the offending subset and pair.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from polychrome import core, matroids
from polychrome.core import Polymatroid, isomorphic, mask_elements


@dataclass(frozen=True)
class QuotientChain:
    """Ordered matroid tables M_1..M_k, each successor a quotient."""

    n: int
    parts: tuple[tuple[int, ...], ...]

    def as_polymatroids(self):
        return tuple(matroids.wrap_table(t, self.n) for t in self.parts)


@dataclass(frozen=True)
class ChainFailure:
    """Witness that the recurrence is inconsistent: the chains through
    subset - e and subset - f disagree."""

    kind: str
    subset: int
    e: int
    f: int


def _conflict_witness(p: Polymatroid):
    rank = p.rank
    for z in range(3, 1 << p.n):
        elems = mask_elements(z)
        if len(elems) < 2:
            continue
        for e, f in itertools.combinations(elems, 2):
            be, bf = 1 << e, 1 << f
            zp = z ^ be ^ bf
            a = rank[z] - rank[z ^ be]
            b = rank[z ^ bf] - rank[zp]
            c = rank[z ^ be] - rank[zp]
            d = rank[z] - rank[z ^ bf]
            if a != b and a != d:  # multiset {a,c} != {b,d} given a+c == b+d
                return ChainFailure("conflict", z, e, f)
    return None


def recover_chain(p: Polymatroid, k: int):
    """The unique quotient chain of length k, or a ChainFailure.

    Success requires the recurrence to be order-independent (checked by
    the adjacent-pair criterion on every subset), every recovered table to
    be a matroid, consecutive parts to sit in the quotient order, and the
    parts to re-sum to the input; each condition is verified.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not p.is_k_polymatroid(k):
        raise ValueError(f"not a {k}-polymatroid")
    bad = _conflict_witness(p)
    if bad is not None:
        return bad
    n = p.n
    rank = p.rank
    tables = []
    for i in range(1, k + 1):
        t = [0] * (1 << n)
        for s in range(1, 1 << n):
            y = s & -s
            t[s] = t[s ^ y] + (1 if rank[s] - rank[s ^ y] >= i else 0)
        tables.append(tuple(t))
    parts = [matroids.wrap_table(t, n) for t in tables]
    for q in parts:
        if core.diagnose_table(q.rank, n) is not None or not q.is_matroid():
            return ChainFailure("not_matroid", 0, -1, -1)
    for i in range(k - 1):
        if not matroids.is_quotient(parts[i + 1], parts[i]):
            return ChainFailure("not_quotient", 0, i, i + 1)
    if core.sum_of(parts).rank != rank:
        return ChainFailure("sum_mismatch", 0, -1, -1)
    return QuotientChain(n, tuple(tables))


def is_k_quotient(p: Polymatroid, k: int) -> bool:
    return isinstance(recover_chain(p, k), QuotientChain)


def excluded_minor_tables(k: int) -> list[tuple[int, tuple[int, int, int]]]:
    """The two-element excluded-minor tables for the k-quotient class:
    one table [0, b, c, a+c] per 3-subset {a, b, c} of 0..k with a < b < c.
    Returns (table, (a, b, c)) pairs; there are C(k+1, 3) of them."""
    out = []
    for a, b, c in itertools.combinations(range(k + 1), 3):
        out.append(((0, b, c, a + c), (a, b, c)))
    return out


@dataclass(frozen=True)
class MinorWitness:
    deleted: int
    contracted: int
    abc: tuple[int, int, int]
    permutation: tuple[int, ...]


def excluded_minor_search(p: Polymatroid, k: int):
    """First two-element minor isomorphic to one of the excluded-minor
    tables, or None.  For k-polymatroids this decides membership in the
    k-quotient class (cross-checked against the recurrence in the tests)."""
    if not p.is_k_polymatroid(k):
        raise ValueError(f"not a {k}-polymatroid")
    targets = [
        (core.validate(t, 2), abc) for t, abc in excluded_minor_tables(k)
    ]
    n = p.n
    full = p.full_mask
    for keep in itertools.combinations(range(n), 2):
        keep_mask = (1 << keep[0]) | (1 << keep[1])
        others = full ^ keep_mask
        sub = others
        while True:
            deleted = sub
            contracted = others ^ sub
            minor = p.minor(deleted, contracted)
            for target, abc in targets:
                perm = isomorphic(minor, target)
                if perm is not None:
                    return MinorWitness(deleted, contracted, abc, perm)
            if sub == 0:
                break
            sub = (sub - 1) & others
    return None


def minimal_quotient_k(p: Polymatroid, k_max: int):
    """Least k <= k_max with a length-k quotient chain, or None."""
    for k in range(max(1, p.min_k()), k_max + 1):
        if is_k_quotient(p, k):
            return k
    return None


def rank_difference(chain: QuotientChain) -> int:
    """r(M_1) - r(M_2) for a length-2 chain."""
    if len(chain.parts) != 2:
        raise ValueError("rank difference is defined for length-2 chains")
    return chain.parts[0][-1] - chain.parts[1][-1]


def has_free_minor(p: Polymatroid, m: int) -> bool:
    """True when some minor on m elements is the free matroid U_{m,m}."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > p.n:
        return False
    n = p.n
    full = p.full_mask
    target = tuple(a.bit_count() for a in range(1 << m))
    for keep in itertools.combinations(range(n), m):
        keep_mask = 0
        for e in keep:
            keep_mask |= 1 << e
        others = full ^ keep_mask
        sub = others
        while True:
            deleted = sub
            contracted = others ^ sub
            minor = p.minor(deleted, contracted)
            if minor.rank == target:
                return True
            if sub == 0:
                break
            sub = (sub - 1) & others
    return False

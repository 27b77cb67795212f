"""Integer polymatroids as exact rank tables over bitmask subsets.

A polymatroid on n labeled elements is stored as its full rank table: a
tuple of 2**n nonnegative integers indexed by subset mask, normalized,
non-decreasing under inclusion, and submodular.  Matroids are the tables
that additionally rise by at most one per added element.  Everything here
is immutable and pure; subsets are bitmask ints throughout (bit j set =
element j in the subset), with index = sum of 2**j over member elements.

Table storage is hard-capped at n <= 16 elements; the enumeration-heavy
operations elsewhere document their own much smaller practical caps.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from polychrome import _kernels

N_CAP = 16


class PolychromeError(Exception):
    """Base class for all errors raised by this package."""


class CapExceeded(PolychromeError):
    """A documented size cap was exceeded."""


class GroundSetMismatch(PolychromeError):
    """Operands live on different ground sets."""


class AxiomViolation(PolychromeError):
    """A rank table failed one of the three axioms.

    ``a`` and ``b`` are the witness subset masks; ``b`` is -1 when a single
    subset is involved.
    """

    kind = "axiom"

    def __init__(self, a: int, b: int = -1):
        self.a = a
        self.b = b
        super().__init__(f"{self.kind} violated, witness subsets {a}, {b}")


class NotNormalized(AxiomViolation):
    kind = "normalized"


class NegativeRank(AxiomViolation):
    kind = "negative"


class NotMonotone(AxiomViolation):
    kind = "monotone"


class NotSubmodular(AxiomViolation):
    kind = "submodular"


_VIOLATION_CLASSES = {
    "normalized": NotNormalized,
    "negative": NegativeRank,
    "monotone": NotMonotone,
    "submodular": NotSubmodular,
}


def diagnose_table(table, n: int) -> AxiomViolation | None:
    """First violated axiom with its witness pair, or None if valid.

    The instance is returned unraised so callers can report instead of
    aborting; ``validate`` raises it.
    """
    hit = _kernels.polymatroid_violation(tuple(table), n)
    if hit is None:
        return None
    kind, a, b = hit
    return _VIOLATION_CLASSES[kind](a, b)


@dataclass(frozen=True)
class GroundSet:
    """A labeled ground set: elements are indices 0..size-1."""

    size: int
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("ground set size must be nonnegative")
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != self.size:
                raise ValueError("names must match the ground set size")
            if len(set(self.names)) != self.size:
                raise ValueError("names must be pairwise distinct")

    def label(self, e: int) -> str:
        if self.names is not None:
            return self.names[e]
        return str(e)

    def subset(self, kept_mask: int) -> "GroundSet":
        """Ground set for the kept elements (mask), preserving names."""
        kept = mask_elements(kept_mask)
        if self.names is None:
            return GroundSet(len(kept))
        return GroundSet(len(kept), tuple(self.names[e] for e in kept))


def as_mask(subset, n: int) -> int:
    """Coerce an int mask or an iterable of element indices to a mask."""
    if isinstance(subset, int):
        if subset < 0 or subset >= (1 << n):
            raise ValueError(f"mask {subset} out of range for n={n}")
        return subset
    mask = 0
    for e in subset:
        if not 0 <= e < n:
            raise ValueError(f"element {e} out of range for n={n}")
        mask |= 1 << e
    return mask


def mask_elements(mask: int) -> list[int]:
    """Element indices of a mask, ascending."""
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return out


@dataclass(frozen=True)
class Polymatroid:
    """A validated integer polymatroid rank table.

    Construct through ``validate`` (checked) or the arithmetic operations
    below, which preserve validity.  Instances are immutable, hashable and
    safe to share across threads.
    """

    ground: GroundSet
    rank: tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.ground.size

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def total_rank(self) -> int:
        return self.rank[self.full_mask]

    def rank_of(self, subset) -> int:
        return self.rank[as_mask(subset, self.n)]

    def singleton_ranks(self) -> tuple[int, ...]:
        return tuple(self.rank[1 << e] for e in range(self.n))

    def is_k_polymatroid(self, k: int) -> bool:
        """True when every singleton rank is at most k."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        return all(r <= k for r in self.singleton_ranks())

    def min_k(self) -> int:
        """Least k for which this is a k-polymatroid (0 for the zero table)."""
        return max(self.singleton_ranks(), default=0)

    def is_matroid(self) -> bool:
        """True when the rank rises by at most one per added element."""
        return _kernels.is_unit_increase(self.rank, self.n)

    def is_zero(self) -> bool:
        return self.total_rank == 0 if self.n else True

    # -- minors ----------------------------------------------------------

    def _extract(self, kept_mask: int, base_mask: int) -> "Polymatroid":
        """Table over ``kept_mask`` of X -> rank(X | base) - rank(base)."""
        kept = mask_elements(kept_mask)
        bit = [1 << e for e in kept]
        m = len(kept)
        base_rank = self.rank[base_mask]
        table = [0] * (1 << m)
        for t in range(1 << m):
            big = base_mask
            rem = t
            j = 0
            while rem:
                if rem & 1:
                    big |= bit[j]
                rem >>= 1
                j += 1
            table[t] = self.rank[big] - base_rank
        return Polymatroid(self.ground.subset(kept_mask), tuple(table))

    def delete(self, subset) -> "Polymatroid":
        """Restriction to the complement; element indices are compacted
        preserving relative order, names follow elements."""
        a = as_mask(subset, self.n)
        return self._extract(self.full_mask ^ a, 0)

    def contract(self, subset) -> "Polymatroid":
        a = as_mask(subset, self.n)
        return self._extract(self.full_mask ^ a, a)

    def minor(self, delete_subset, contract_subset) -> "Polymatroid":
        """Delete one subset and contract a disjoint one (order immaterial)."""
        d = as_mask(delete_subset, self.n)
        c = as_mask(contract_subset, self.n)
        if d & c:
            raise ValueError("deletion and contraction sets must be disjoint")
        return self.delete(d).contract(_compact_mask(c, self.full_mask ^ d))

    def restrict(self, subset) -> "Polymatroid":
        a = as_mask(subset, self.n)
        return self.delete(self.full_mask ^ a)

    # -- sums and transforms ----------------------------------------------

    def direct_sum(self, other: "Polymatroid") -> "Polymatroid":
        """Concatenated ground sets; rank adds across the two sides."""
        n1, n2 = self.n, other.n
        table = [0] * (1 << (n1 + n2))
        m1 = (1 << n1) - 1
        for s in range(1 << (n1 + n2)):
            table[s] = self.rank[s & m1] + other.rank[s >> n1]
        names = None
        if self.ground.names is not None and other.ground.names is not None:
            combined = self.ground.names + other.ground.names
            if len(set(combined)) == n1 + n2:
                names = combined
        return Polymatroid(GroundSet(n1 + n2, names), tuple(table))

    def truncate(self, s: int) -> "Polymatroid":
        """Pointwise min of the rank with s."""
        if not 0 <= s <= self.total_rank:
            raise ValueError(f"truncation rank {s} outside 0..{self.total_rank}")
        return Polymatroid(self.ground, tuple(min(r, s) for r in self.rank))

    def i_dual(self, i: int) -> "Polymatroid":
        """The involution X -> i|X| - rank(E) + rank(E-X) on i-polymatroids."""
        if not self.is_k_polymatroid(i):
            raise ValueError(f"not an {i}-polymatroid: a singleton exceeds {i}")
        full = self.full_mask
        top = self.total_rank
        table = tuple(
            i * s.bit_count() - top + self.rank[full ^ s]
            for s in range(1 << self.n)
        )
        return Polymatroid(self.ground, table)

    def inflate(self, i: int, j: int) -> "Polymatroid":
        """Add (j - i)|X| to every rank, turning an i-polymatroid into a
        j-polymatroid."""
        if j < i:
            raise ValueError("target class j must be at least i")
        if not self.is_k_polymatroid(i):
            raise ValueError(f"not an {i}-polymatroid: a singleton exceeds {i}")
        d = j - i
        table = tuple(r + d * s.bit_count() for s, r in enumerate(self.rank))
        return Polymatroid(self.ground, table)


def validate(table, n: int, names=None) -> Polymatroid:
    """Check the three axioms and wrap the table, or raise the first
    violation found (NotNormalized, NegativeRank, NotMonotone(A,B) or
    NotSubmodular(A,B), each carrying its witness masks)."""
    if n < 0 or n > N_CAP:
        raise CapExceeded(f"ground set size {n} outside 0..{N_CAP}")
    t = tuple(int(x) for x in table)
    bad = diagnose_table(t, n)
    if bad is not None:
        raise bad
    return Polymatroid(GroundSet(n, tuple(names) if names else None), t)


def zero_polymatroid(n: int, names=None) -> Polymatroid:
    return Polymatroid(
        GroundSet(n, tuple(names) if names else None), (0,) * (1 << n)
    )


def sum_of(parts) -> Polymatroid:
    """Pointwise sum of rank tables over a common ground set."""
    parts = list(parts)
    if not parts:
        raise ValueError("need at least one part")
    n = parts[0].n
    if any(p.n != n for p in parts):
        raise GroundSetMismatch("parts live on different ground sets")
    table = [0] * (1 << n)
    for p in parts:
        for s, r in enumerate(p.rank):
            table[s] += r
    return Polymatroid(parts[0].ground, tuple(table))


def _compact_mask(mask: int, within: int) -> int:
    """Re-index ``mask`` (subset of ``within``) after compaction of
    ``within`` to 0..popcount-1."""
    out = 0
    j = 0
    e = 0
    while within >> e:
        if (within >> e) & 1:
            if (mask >> e) & 1:
                out |= 1 << j
            j += 1
        e += 1
    return out


def apply_permutation(p: Polymatroid, perm) -> Polymatroid:
    """Relabel elements: new element perm[e] carries old element e."""
    perm = tuple(perm)
    n = p.n
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation of 0..n-1")
    table = [0] * (1 << n)
    for s in range(1 << n):
        img = 0
        rem = s
        e = 0
        while rem:
            if rem & 1:
                img |= 1 << perm[e]
            rem >>= 1
            e += 1
        table[img] = p.rank[s]
    names = p.ground.names
    if names is not None:
        new_names = [""] * n
        for e in range(n):
            new_names[perm[e]] = names[e]
        g = GroundSet(n, tuple(new_names))
    else:
        g = GroundSet(n)
    return Polymatroid(g, tuple(table))


def isomorphic(p1: Polymatroid, p2: Polymatroid):
    """Lexicographically least permutation carrying p2 onto p1, or None.

    The witness pi satisfies rank1(pi(A)) == rank2(A) for every subset A.
    Exhaustive over all n! permutations; fine at the n <= 4 scale the
    excluded-minor checks need, usable up to n = 8.
    """
    if p1.n != p2.n:
        return None
    n = p1.n
    if sorted(p1.rank) != sorted(p2.rank):
        return None
    if sorted(p1.singleton_ranks()) != sorted(p2.singleton_ranks()):
        return None
    r1, r2 = p1.rank, p2.rank
    for perm in itertools.permutations(range(n)):
        ok = True
        for s in range(1 << n):
            img = 0
            rem = s
            e = 0
            while rem:
                if rem & 1:
                    img |= 1 << perm[e]
                rem >>= 1
                e += 1
            if r1[img] != r2[s]:
                ok = False
                break
        if ok:
            return perm
    return None


def connectivity_split(p: Polymatroid) -> list[int]:
    """Finest partition of E (as masks, ordered by least element) with
    rank(A) equal to the sum of the block restrictions for every A.

    Defined by the direct-sum equation itself, not the rank shortcut
    rank(X) + rank(E-X) == rank(E); the shortcut is only used as a sound
    quick rejection (it is the A = E instance of the equation).
    """
    n = p.n
    if n == 0:
        return []
    full = p.full_mask
    rank = p.rank
    size = 1 << n
    splits = []
    for x in range(1, full, 2):  # bit 0 fixed on one side kills complements
        if rank[x] + rank[full ^ x] != rank[full]:
            continue
        comp = full ^ x
        if all(rank[a] == rank[a & x] + rank[a & comp] for a in range(size)):
            splits.append(x)
    sig = {}
    for e in range(n):
        key = tuple((x >> e) & 1 for x in splits)
        sig[key] = sig.get(key, 0) | (1 << e)
    blocks = sorted(sig.values(), key=lambda m: m & -m)
    for a in range(size):
        if rank[a] != sum(rank[a & b] for b in blocks):
            raise RuntimeError("connectivity blocks failed the sum equation")
    return blocks


def is_connected(p: Polymatroid) -> bool:
    return len(connectivity_split(p)) <= 1

"""Brute-force oracles, kept deliberately independent of the package's
pruned kernels: full-definition axiom scans, an element-by-element matroid
generator, and decomposition search by blunt multiset enumeration.  Slow on
purpose; the real code is tested against these on small ground sets."""
import itertools


def brute_is_polymatroid(table, n):
    """Three-loop scan of the literal axioms over all subset pairs."""
    size = 1 << n
    if table[0] != 0:
        return False
    for a in range(size):
        if table[a] < 0:
            return False
        for b in range(size):
            if a | b == b and table[a] > table[b]:
                return False
            if table[a | b] + table[a & b] > table[a] + table[b]:
                return False
    return True


def brute_is_matroid(table, n):
    if not brute_is_polymatroid(table, n):
        return False
    size = 1 << n
    for s in range(size):
        for e in range(n):
            if s & (1 << e):
                continue
            if table[s | (1 << e)] - table[s] > 1:
                return False
    return True


def naive_matroid_tables(n, r_max):
    """All matroid tables on n elements, grown one element at a time.

    Each extension chooses rank(S + new) in {rank(S), rank(S) + 1} for every
    old subset S and keeps the candidates that pass the brute-force axiom
    scan.  Exponential in 2**n; fine for n <= 4.
    """
    tables = [(0,)]
    for m in range(1, n + 1):
        half = 1 << (m - 1)
        grown = []
        for old in tables:
            for bumps in itertools.product((0, 1), repeat=half):
                new = list(old) + [old[s] + bumps[s] for s in range(half)]
                if brute_is_matroid(new, m):
                    grown.append(tuple(new))
        tables = grown
    return sorted(t for t in tables if t[-1] <= r_max)


def naive_decompositions(rho, n, pool):
    """All multisets from the pool of positive-rank matroid tables summing
    to rho, by combinations-with-replacement over the pointwise-bounded
    pool (the bound is the only shortcut: any part of a sum fits under it).
    """
    rho = tuple(rho)
    usable = [
        t for t in pool
        if t[-1] > 0 and all(a <= b for a, b in zip(t, rho))
    ]
    total = rho[-1]
    found = []
    for k in range(1, total + 1):
        for combo in itertools.combinations_with_replacement(usable, k):
            sums = [0] * (1 << n)
            for t in combo:
                for i, v in enumerate(t):
                    sums[i] += v
            if tuple(sums) == rho:
                found.append(tuple(sorted(combo)))
    return sorted(set(found))


def naive_ordered_count(rho, n, pool, k):
    """Ordered k-tuples (zero parts allowed) summing to rho, enumerated as
    a raw cartesian product.  Only viable for tiny pools."""
    rho = tuple(rho)
    usable = [
        t for t in pool if all(a <= b for a, b in zip(t, rho))
    ]
    zero = (0,) * (1 << n)
    if zero not in usable:
        usable.append(zero)
    count = 0
    for combo in itertools.product(usable, repeat=k):
        sums = [0] * (1 << n)
        for t in combo:
            for i, v in enumerate(t):
                sums[i] += v
        if tuple(sums) == rho:
            count += 1
    return count


def brute_connectivity_blocks(table, n):
    """Finest partition satisfying the direct-sum equation, by testing
    every partition of the ground set (Bell-number blowup; n <= 5)."""
    elements = list(range(n))
    size = 1 << n

    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for part in partitions(rest):
            for i in range(len(part)):
                yield part[:i] + [part[i] | (1 << first)] + part[i + 1:]
            yield part + [(1 << first)]

    def works(blocks):
        return all(
            table[a] == sum(table[a & b] for b in blocks)
            for a in range(size)
        )

    best = None
    for blocks in partitions(elements):
        if works(blocks) and (best is None or len(blocks) > len(best)):
            best = blocks
    return sorted(best, key=lambda m: m & -m)

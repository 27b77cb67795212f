"""Pure-Python rank-table kernels.

A rank table over a ground set of size n is a sequence of 2**n integers
indexed by subset bitmask (bit j set = element j in the subset).  These
routines are the hot inner loops of the toolkit: axiom scans, unit-increase
tests, and the pruned generators behind the matroid/polymatroid oracles.
``polychrome._kernels`` picks this module or its compiled mirror at import.

Validity here means the three rank axioms: table[0] == 0, monotone under
inclusion, and submodular.  Both inclusion axioms are checked through their
local single-element forms, which are equivalent to the global ones for a
normalized table and give O(4**n * n**2) total work instead of O(8**n).
"""


def polymatroid_violation(table, n):
    """First axiom violation in ``table``, or None if the table is valid.

    Returns ``(kind, a, b)`` with kind one of "normalized", "negative",
    "monotone", "submodular"; a and b are witness subset masks (b is -1
    when only one subset is involved).  Scan order is fixed: normalization,
    negative entries, all monotone steps, all submodular steps, each in
    ascending subset order, so the reported witness is deterministic.
    """
    size = 1 << n
    if len(table) != size:
        raise ValueError(f"table has {len(table)} entries, expected {size}")
    if table[0] != 0:
        return ("normalized", 0, -1)
    for s in range(size):
        if table[s] < 0:
            return ("negative", s, -1)
    for s in range(1, size):
        ts = table[s]
        rem = s
        while rem:
            e = rem & -rem
            rem ^= e
            if table[s ^ e] > ts:
                return ("monotone", s ^ e, s)
    for s in range(3, size):
        if s & (s - 1) == 0:
            continue
        ts = table[s]
        bits = []
        rem = s
        while rem:
            e = rem & -rem
            rem ^= e
            bits.append(e)
        for i in range(len(bits)):
            ei = bits[i]
            for j in range(i + 1, len(bits)):
                fj = bits[j]
                # axiom on A = s - fj, B = s - ei: A|B = s, A&B = s - ei - fj
                if ts + table[s ^ ei ^ fj] > table[s ^ ei] + table[s ^ fj]:
                    return ("submodular", s ^ fj, s ^ ei)
    return None


def is_unit_increase(table, n):
    """True when every single-element step changes the rank by 0 or 1."""
    size = 1 << n
    for s in range(size):
        ts = table[s]
        for j in range(n):
            e = 1 << j
            if s & e:
                continue
            d = table[s | e] - ts
            if d < 0 or d > 1:
                return False
    return True


def _extension_bounds(table, s, cap, unit):
    """Admissible value range [lo, hi] for table[s] given all lower entries.

    Lower entries are all t with t < s as integers, which include every
    proper subset of s.  The bounds encode monotonicity, the submodular
    pair condition, the rank cap, and (when ``unit``) unit increase.
    """
    bits = []
    rem = s
    while rem:
        e = rem & -rem
        rem ^= e
        bits.append(e)
    lo = 0
    hi = cap
    for e in bits:
        sub = table[s ^ e]
        if sub > lo:
            lo = sub
        if unit and sub + 1 < hi:
            hi = sub + 1
    for i in range(len(bits)):
        ei = bits[i]
        for j in range(i + 1, len(bits)):
            fj = bits[j]
            bound = table[s ^ ei] + table[s ^ fj] - table[s ^ ei ^ fj]
            if bound < hi:
                hi = bound
    return lo, hi


def _enumerate_tables(n, cap, unit):
    size = 1 << n
    table = [0] * size
    out = []

    def rec(s):
        if s == size:
            out.append(tuple(table))
            return
        lo, hi = _extension_bounds(table, s, cap, unit)
        for v in range(lo, hi + 1):
            table[s] = v
            rec(s + 1)

    if size == 1:
        out.append((0,))
    else:
        rec(1)
    return out


def enumerate_matroid_tables(n, r_max):
    """All matroid rank tables on n elements with total rank <= r_max.

    Entries are filled in ascending subset-index order (a linear extension
    of inclusion), choosing each value in increasing order, so the output
    comes out in lexicographic table order with no post-sorting.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _enumerate_tables(n, min(r_max, n), unit=True)


def enumerate_polymatroid_tables(n, rank_cap):
    """All valid rank tables on n elements with total rank <= rank_cap."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _enumerate_tables(n, rank_cap, unit=False)


def subtract_if_valid(residual, part, n):
    """``residual - part`` when the difference is a valid rank table.

    Returns the difference as a tuple, or None if ``part`` exceeds
    ``residual`` anywhere or the difference breaks an axiom.  Both inputs
    are assumed normalized (entry 0 is 0).
    """
    size = 1 << n
    diff = [0] * size
    for i in range(size):
        d = residual[i] - part[i]
        if d < 0:
            return None
        diff[i] = d
    for s in range(1, size):
        ds = diff[s]
        bits = []
        rem = s
        while rem:
            e = rem & -rem
            rem ^= e
            if diff[s ^ e] > ds:
                return None
            bits.append(e)
        for i in range(len(bits)):
            ei = bits[i]
            for j in range(i + 1, len(bits)):
                fj = bits[j]
                if ds + diff[s ^ ei ^ fj] > diff[s ^ ei] + diff[s ^ fj]:
                    return None
    return tuple(diff)


def pointwise_le(a, b):
    """True when a[i] <= b[i] for every index."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def filter_pointwise_le(tables, bound):
    """Sub-list of ``tables`` that are <= ``bound`` entrywise."""
    out = []
    for t in tables:
        for x, y in zip(t, bound):
            if x > y:
                break
        else:
            out.append(t)
    return out

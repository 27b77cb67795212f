# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mirrors of polychrome._kernels.pure.

Same signatures, same return values, same deterministic orders; only the
inner loops move to C.  Keep the two modules in lockstep (tests compare
them directly).
"""

from libc.stdlib cimport free, malloc


cdef long long *_load(object table, Py_ssize_t size) except NULL:
    cdef long long *buf = <long long *> malloc(size * sizeof(long long))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(size):
            buf[i] = table[i]
    except BaseException:
        free(buf)
        raise
    return buf


def polymatroid_violation(table, int n):
    """First axiom violation in ``table``, or None if the table is valid."""
    cdef Py_ssize_t size = 1 << n
    if len(table) != size:
        raise ValueError(f"table has {len(table)} entries, expected {size}")
    cdef long long *t = _load(table, size)
    cdef Py_ssize_t s
    cdef long long ts
    cdef unsigned long long rem, e, ei, fj, rem2
    try:
        if t[0] != 0:
            return ("normalized", 0, -1)
        for s in range(size):
            if t[s] < 0:
                return ("negative", s, -1)
        for s in range(1, size):
            ts = t[s]
            rem = <unsigned long long> s
            while rem:
                e = rem & (~rem + 1)
                rem ^= e
                if t[s ^ e] > ts:
                    return ("monotone", <long long> (s ^ e), s)
        for s in range(3, size):
            if s & (s - 1) == 0:
                continue
            ts = t[s]
            rem = <unsigned long long> s
            while rem:
                ei = rem & (~rem + 1)
                rem ^= ei
                rem2 = rem
                while rem2:
                    fj = rem2 & (~rem2 + 1)
                    rem2 ^= fj
                    if ts + t[s ^ ei ^ fj] > t[s ^ ei] + t[s ^ fj]:
                        return ("submodular", <long long> (s ^ fj),
                                <long long> (s ^ ei))
        return None
    finally:
        free(t)


def is_unit_increase(table, int n):
    """True when every single-element step changes the rank by 0 or 1."""
    cdef Py_ssize_t size = 1 << n
    cdef long long *t = _load(table, size)
    cdef Py_ssize_t s
    cdef int j
    cdef long long d, e
    try:
        for s in range(size):
            for j in range(n):
                e = 1 << j
                if s & e:
                    continue
                d = t[s | e] - t[s]
                if d < 0 or d > 1:
                    return False
        return True
    finally:
        free(t)


cdef void _bounds(long long *table, Py_ssize_t s, long long cap, bint unit,
                  long long *lo_out, long long *hi_out) noexcept:
    cdef long long lo = 0
    cdef long long hi = cap
    cdef long long sub, bound
    cdef unsigned long long rem = <unsigned long long> s
    cdef unsigned long long e, ei, fj, rem2
    while rem:
        e = rem & (~rem + 1)
        rem ^= e
        sub = table[s ^ e]
        if sub > lo:
            lo = sub
        if unit and sub + 1 < hi:
            hi = sub + 1
    rem = <unsigned long long> s
    while rem:
        ei = rem & (~rem + 1)
        rem ^= ei
        rem2 = rem
        while rem2:
            fj = rem2 & (~rem2 + 1)
            rem2 ^= fj
            bound = table[s ^ ei] + table[s ^ fj] - table[s ^ ei ^ fj]
            if bound < hi:
                hi = bound
    lo_out[0] = lo
    hi_out[0] = hi


cdef _emit(long long *table, Py_ssize_t size):
    cdef Py_ssize_t i
    return tuple([table[i] for i in range(size)])


cdef void _rec_tables(long long *table, Py_ssize_t s, Py_ssize_t size,
                      long long cap, bint unit, list out):
    cdef long long lo, hi, v
    if s == size:
        out.append(_emit(table, size))
        return
    _bounds(table, s, cap, unit, &lo, &hi)
    v = lo
    while v <= hi:
        table[s] = v
        _rec_tables(table, s + 1, size, cap, unit, out)
        v += 1


cdef list _enumerate_tables(int n, long long cap, bint unit):
    cdef Py_ssize_t size = 1 << n
    cdef list out = []
    cdef long long *table
    if size == 1:
        return [(0,)]
    table = <long long *> malloc(size * sizeof(long long))
    if table == NULL:
        raise MemoryError()
    try:
        table[0] = 0
        _rec_tables(table, 1, size, cap, unit, out)
    finally:
        free(table)
    return out


def enumerate_matroid_tables(int n, int r_max):
    """All matroid rank tables on n elements with total rank <= r_max."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _enumerate_tables(n, min(r_max, n), True)


def enumerate_polymatroid_tables(int n, int rank_cap):
    """All valid rank tables on n elements with total rank <= rank_cap."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _enumerate_tables(n, rank_cap, False)


def subtract_if_valid(residual, part, int n):
    """``residual - part`` when the difference is a valid rank table."""
    cdef Py_ssize_t size = 1 << n
    cdef long long *diff = <long long *> malloc(size * sizeof(long long))
    cdef Py_ssize_t i, s
    cdef long long d, ds
    cdef unsigned long long rem, e, ei, fj, rem2
    if diff == NULL:
        raise MemoryError()
    try:
        for i in range(size):
            d = residual[i]
            d -= part[i]
            if d < 0:
                return None
            diff[i] = d
        for s in range(1, size):
            ds = diff[s]
            rem = <unsigned long long> s
            while rem:
                e = rem & (~rem + 1)
                rem ^= e
                if diff[s ^ e] > ds:
                    return None
            rem = <unsigned long long> s
            while rem:
                ei = rem & (~rem + 1)
                rem ^= ei
                rem2 = rem
                while rem2:
                    fj = rem2 & (~rem2 + 1)
                    rem2 ^= fj
                    if ds + diff[s ^ ei ^ fj] > diff[s ^ ei] + diff[s ^ fj]:
                        return None
        return _emit(diff, size)
    finally:
        free(diff)


def pointwise_le(a, b):
    """True when a[i] <= b[i] for every index."""
    cdef Py_ssize_t i, m = len(a)
    for i in range(m):
        if a[i] > b[i]:
            return False
    return True


def filter_pointwise_le(tables, bound):
    """Sub-list of ``tables`` that are <= ``bound`` entrywise."""
    cdef Py_ssize_t size = len(bound)
    cdef long long *b = _load(bound, size)
    cdef list out = []
    cdef Py_ssize_t i
    cdef bint ok
    cdef tuple t
    try:
        for t in tables:
            ok = True
            for i in range(size):
                if t[i] > b[i]:
                    ok = False
                    break
            if ok:
                out.append(t)
        return out
    finally:
        free(b)

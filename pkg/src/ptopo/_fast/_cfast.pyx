# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; same contracts as ``_pyfast`` for carriers of at most 6 points."""

from libc.stdlib cimport malloc, free

from ..errors import StabilizationError

ctypedef unsigned long long u64

cdef enum:
    MAXN = 6
    MAXSUB = 64

NBHD = 0
CLOSURE = 1
AXIOM_F = 0
AXIOM_R = 1
MAX_POINTS = MAXN


cdef inline u64 _hull(const u64* unions, int n, u64 mask) nogil:
    cdef u64 out = 0
    cdef int y
    for y in range(n):
        if (mask >> y) & 1:
            out |= unions[y]
    return out


cdef inline u64 _closure(const u64* unions, int n, u64 mask) nogil:
    cdef u64 out = 0
    cdef int x
    for x in range(n):
        if unions[x] & mask:
            out |= (<u64>1) << x
    return out


cdef inline u64 _interior(const u64* unions, int n, u64 mask) nogil:
    cdef u64 out = 0
    cdef int x
    for x in range(n):
        if not (unions[x] & ~mask):
            out |= (<u64>1) << x
    return out


cdef inline u64 _step(int kind, const u64* unions, int n, u64 mask) nogil:
    if kind == 0:
        return _hull(unions, n, mask)
    return _closure(unions, n, mask)


cdef inline bint _bit(u64 table, u64 s) nogil:
    return (table >> s) & 1


cdef int _load(object seq, u64* out) except -1:
    cdef int i = 0
    for v in seq:
        out[i] = <u64>v
        i += 1
    return i


cdef int _chain(int kind, const u64* unions, int n, u64 mask, u64* out) except -1:
    """Fill ``out`` with the iterates up to the fixed point; returns their count."""
    cdef int count = 1
    cdef u64 nxt
    out[0] = mask
    while count <= n + 1:
        nxt = _step(kind, unions, n, out[count - 1])
        if nxt == out[count - 1]:
            return count
        out[count] = nxt
        count += 1
    raise StabilizationError("operator iteration did not stabilize within |X| steps")


def hull(unions, mask):
    cdef u64 u[MAXN]
    cdef int n = _load(unions, u)
    return _hull(u, n, <u64>mask)


def closure_mask(unions, mask):
    cdef u64 u[MAXN]
    cdef int n = _load(unions, u)
    return _closure(u, n, <u64>mask)


def interior_mask(unions, mask):
    cdef u64 u[MAXN]
    cdef int n = _load(unions, u)
    return _interior(u, n, <u64>mask)


def step(kind, unions, mask):
    cdef u64 u[MAXN]
    cdef int n = _load(unions, u)
    return _step(kind, u, n, <u64>mask)


def iterate_mask(int kind, unions, mask, int steps):
    cdef u64 u[MAXN]
    cdef u64 buf[MAXN + 2]
    cdef int n = _load(unions, u)
    cdef u64 m = <u64>mask
    cdef int i, count
    if steps >= 0:
        for i in range(steps):
            m = _step(kind, u, n, m)
        return m
    count = _chain(kind, u, n, m, buf)
    return buf[count - 1]


def chain(int kind, unions, mask):
    cdef u64 u[MAXN]
    cdef u64 buf[MAXN + 2]
    cdef int n = _load(unions, u)
    cdef int count = _chain(kind, u, n, <u64>mask, buf)
    return [buf[i] for i in range(count)]


cdef u64 _downset(const u64* maxes, int count, int n) nogil:
    cdef u64 table = 0
    cdef u64 s
    cdef int i
    for s in range(1, (<u64>1) << n):
        for i in range(count):
            if not (s & ~maxes[i]):
                table |= (<u64>1) << s
                break
    return table


def downset_table(maxes, int n):
    cdef u64 m[MAXSUB]
    cdef int count = _load(maxes, m)
    return _downset(m, count, n)


def maximal_sets(table, int n):
    cdef u64 t = <u64>table
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64 s
    cdef int y
    cdef bint maximal
    out = []
    for s in range(1, (<u64>1) << n):
        if not _bit(t, s):
            continue
        maximal = True
        for y in range(n):
            if not (s >> y) & 1 and _bit(t, s | ((<u64>1) << y)):
                maximal = False
                break
        if maximal:
            out.append(s)
    return tuple(out)


def members(table):
    cdef u64 t = <u64>table
    cdef u64 s
    return [s for s in range(64) if (t >> s) & 1]


def is_p_topological(q_tables, q_maxes, p_unions, int n):
    cdef u64 t[MAXN]
    cdef u64 u[MAXN]
    cdef int x
    _load(q_tables, t)
    _load(p_unions, u)
    for x in range(n):
        for m in q_maxes[x]:
            if not _bit(t[x], _hull(u, n, <u64>m)):
                return False
    return True


def is_p_regular(q_tables, q_maxes, p_unions, int n):
    cdef u64 t[MAXN]
    cdef u64 u[MAXN]
    cdef int x
    _load(q_tables, t)
    _load(p_unions, u)
    for x in range(n):
        for m in q_maxes[x]:
            if not _bit(t[x], _closure(u, n, <u64>m)):
                return False
    return True


def interior_witness(q_tables, p_unions, int n):
    cdef u64 t[MAXN]
    cdef u64 u[MAXN]
    cdef u64 interiors[MAXSUB]
    cdef int x, count, i
    cdef u64 g, b, inner
    cdef bint found
    _load(q_tables, t)
    _load(p_unions, u)
    for x in range(n):
        count = 0
        for g in range(1, (<u64>1) << n):
            if _bit(t[x], g):
                inner = _interior(u, n, g)
                if inner:
                    interiors[count] = inner
                    count += 1
        for b in range(1, (<u64>1) << n):
            if not _bit(t[x], b):
                continue
            found = False
            for i in range(count):
                if not (b & ~interiors[i]):
                    found = True
                    break
            if not found:
                return False
    return True


def lower_tables(int kind, q_maxes, p_unions, int n):
    cdef u64 u[MAXN]
    cdef u64 gens[MAXSUB * (MAXN + 2)]
    cdef int x, count
    _load(p_unions, u)
    out = []
    for x in range(n):
        count = 0
        for m in q_maxes[x]:
            count += _chain(kind, u, n, <u64>m, gens + count)
        out.append(_downset(gens, count, n))
    return tuple(out)


def upper_exists(int kind, q_tables, p_unions, int n):
    cdef u64 t[MAXN]
    cdef u64 u[MAXN]
    cdef u64 buf[MAXN + 2]
    cdef int x, i, count
    _load(q_tables, t)
    _load(p_unions, u)
    for x in range(n):
        count = _chain(kind, u, n, (<u64>1) << x, buf)
        for i in range(count):
            if not _bit(t[x], buf[i]):
                return False
    return True


def upper_tables(int kind, q_tables, p_unions, int n):
    cdef u64 t[MAXN]
    cdef u64 u[MAXN]
    cdef u64 buf[MAXN + 2]
    cdef int x, i, count
    cdef u64 s, row, bit
    cdef bint ok
    if not upper_exists(kind, q_tables, p_unions, n):
        return None
    _load(q_tables, t)
    _load(p_unions, u)
    out = []
    for x in range(n):
        bit = (<u64>1) << x
        row = 0
        for s in range(1, (<u64>1) << n):
            count = _chain(kind, u, n, s | bit, buf)
            ok = True
            for i in range(count):
                if not _bit(t[x], buf[i]):
                    ok = False
                    break
            if ok:
                row |= (<u64>1) << s
        out.append(row)
    return tuple(out)


def diagonal_cost(p_tables, n, max_j):
    per_point = sum(bin(t).count("1") for t in p_tables)
    return sum(per_point**k * ((1 << k) - 1) * n for k in range(1, max_j + 1))


def diagonal_search(int kind, q_tables, p_tables, int n, int max_j):
    cdef u64 t[MAXN]
    cdef u64 opts[MAXN][MAXSUB]
    cdef int nopts[MAXN]
    cdef int k, i, y, x, subsets
    cdef u64 e, low, rest, a, b
    cdef bint ca, cb, done
    cdef int* psi
    cdef int* sel
    cdef u64* img
    cdef u64* kap
    _load(q_tables, t)
    for x in range(n):
        nopts[x] = 0
        for s in members(p_tables[x]):
            opts[x][nopts[x]] = <u64>s
            nopts[x] += 1
    psi = <int*>malloc(max_j * sizeof(int))
    sel = <int*>malloc(max_j * sizeof(int))
    img = <u64*>malloc(((<size_t>1) << max_j) * sizeof(u64))
    kap = <u64*>malloc(((<size_t>1) << max_j) * sizeof(u64))
    if not psi or not sel or not img or not kap:
        free(psi); free(sel); free(img); free(kap)
        raise MemoryError()
    try:
        img[0] = 0
        kap[0] = 0
        for k in range(1, max_j + 1):
            subsets = 1 << k
            for i in range(k):
                psi[i] = 0
            while True:
                # sigma odometer for this psi
                for i in range(k):
                    sel[i] = 0
                while True:
                    for e in range(1, <u64>subsets):
                        low = e & (~e + 1)
                        y = 0
                        while not (low >> y) & 1:
                            y += 1
                        rest = e ^ low
                        img[e] = img[rest] | ((<u64>1) << psi[y])
                        kap[e] = kap[rest] | opts[psi[y]][sel[y]]
                        a = img[e]
                        b = kap[e]
                        for x in range(n):
                            ca = _bit(t[x], a)
                            cb = _bit(t[x], b)
                            if (kind == 0 and ca and not cb) or (kind != 0 and cb and not ca):
                                return (
                                    k,
                                    tuple(psi[i] for i in range(k)),
                                    tuple(opts[psi[i]][sel[i]] for i in range(k)),
                                    e,
                                    x,
                                )
                    i = k - 1
                    while i >= 0:
                        sel[i] += 1
                        if sel[i] < nopts[psi[i]]:
                            break
                        sel[i] = 0
                        i -= 1
                    if i < 0:
                        break
                i = k - 1
                while i >= 0:
                    psi[i] += 1
                    if psi[i] < n:
                        break
                    psi[i] = 0
                    i -= 1
                if i < 0:
                    break
    finally:
        free(psi); free(sel); free(img); free(kap)
    return None

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernels.

Same contract as ``_pykernels``: ``rank_mod_p`` works on C integers
(p must stay below 2**31 so products fit in 64 bits); ``bareiss_rank``
keeps arbitrary-precision Python integers but runs the loops in C.
"""

from libc.stdlib cimport malloc, free


def rank_mod_p(rows, long long p):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(rows[0])
    if ncols == 0:
        return 0
    if p >= 2147483648:
        raise ValueError("modulus too large for the compiled kernel")
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, col, piv
    cdef Py_ssize_t rank = 0
    cdef long long v, inv, f, t
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                v = row[j] % p
                m[i * ncols + j] = v
        for col in range(ncols):
            piv = -1
            for i in range(rank, nrows):
                if m[i * ncols + col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(ncols):
                    t = m[piv * ncols + j]
                    m[piv * ncols + j] = m[rank * ncols + j]
                    m[rank * ncols + j] = t
            inv = _inverse(m[rank * ncols + col], p)
            for j in range(col, ncols):
                m[rank * ncols + j] = m[rank * ncols + j] * inv % p
            for i in range(rank + 1, nrows):
                f = m[i * ncols + col]
                if f != 0:
                    for j in range(col, ncols):
                        m[i * ncols + j] = (m[i * ncols + j] - f * m[rank * ncols + j]) % p
                        if m[i * ncols + j] < 0:
                            m[i * ncols + j] += p
            rank += 1
            if rank == nrows:
                break
    finally:
        free(m)
    return rank


cdef long long _inverse(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def bareiss_rank(rows):
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(m)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(m[0])
    cdef Py_ssize_t i, j, col, piv
    cdef Py_ssize_t rank = 0
    cdef list prow, row
    cdef object prev = 1, pv, f
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        pv = prow[col]
        for i in range(rank + 1, nrows):
            row = m[i]
            f = row[col]
            for j in range(col + 1, ncols):
                row[j] = (pv * row[j] - f * prow[j]) // prev
            row[col] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank

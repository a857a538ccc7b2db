# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction over F_p for primes below 2**31."""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef i64 _inv_mod(i64 a, i64 p):
    cdef i64 t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


def rref_mod_p(rows, Py_ssize_t ncols, i64 p):
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t i, j, c, r = 0, piv
    cdef i64 f, inv, x
    cdef i64 *a
    cdef i64 *src
    cdef i64 *dst
    if m == 0 or ncols == 0:
        return [], []
    a = <i64 *> malloc(m * ncols * sizeof(i64))
    if a == NULL:
        raise MemoryError()
    pivots = []
    try:
        for i in range(m):
            row = rows[i]
            for j in range(ncols):
                a[i * ncols + j] = row[j]
        for c in range(ncols):
            if r == m:
                break
            piv = r
            while piv < m and a[piv * ncols + c] == 0:
                piv += 1
            if piv == m:
                continue
            if piv != r:
                for j in range(ncols):
                    x = a[r * ncols + j]
                    a[r * ncols + j] = a[piv * ncols + j]
                    a[piv * ncols + j] = x
            src = a + r * ncols
            inv = _inv_mod(src[c], p)
            if inv != 1:
                for j in range(c, ncols):
                    src[j] = (src[j] * inv) % p
            for i in range(m):
                if i == r:
                    continue
                dst = a + i * ncols
                f = dst[c]
                if f == 0:
                    continue
                for j in range(c, ncols):
                    if src[j] != 0:
                        x = (dst[j] - f * src[j]) % p
                        if x < 0:
                            x += p
                        dst[j] = x
            pivots.append(c)
            r += 1
        out = [[a[i * ncols + j] for j in range(ncols)] for i in range(r)]
    finally:
        free(a)
    return out, pivots


def matmul_mod_p(a, b, i64 p):
    cdef Py_ssize_t m = len(a), k = len(b), n, i, j, t
    cdef i64 s
    cdef i64 *am
    cdef i64 *bm
    if m == 0:
        return []
    if k == 0:
        return [[] for _ in range(m)]
    n = len(b[0])
    am = <i64 *> malloc(m * k * sizeof(i64))
    bm = <i64 *> malloc(k * n * sizeof(i64))
    if am == NULL or bm == NULL:
        free(am)
        free(bm)
        raise MemoryError()
    try:
        for i in range(m):
            row = a[i]
            for t in range(k):
                am[i * k + t] = row[t]
        for t in range(k):
            row = b[t]
            for j in range(n):
                bm[t * n + j] = row[j]
        out = []
        for i in range(m):
            orow = []
            for j in range(n):
                s = 0
                for t in range(k):
                    s = (s + am[i * k + t] * bm[t * n + j]) % p
                orow.append(s)
            out.append(orow)
    finally:
        free(am)
        free(bm)
    return out

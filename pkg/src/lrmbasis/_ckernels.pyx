# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over int64 data.

The caller guarantees that convolution results fit in int64.  ``rref_int``
keeps every entry below 2**30 in magnitude and raises OverflowError when it
cannot, so the caller can rerun the exact pure-Python kernel.
"""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport llabs

ctypedef long long i64

cdef i64 LIMIT = 1 << 30
cdef i64 SOFT = 1 << 20


def convolve(const i64[:] a, const i64[:] b, const int[:, :] table):
    cdef Py_ssize_t N = a.shape[0], i, j
    cdef i64 x, y
    out_arr = np.zeros(N, dtype=np.int64)
    cdef i64[:] out = out_arr
    for i in range(N):
        x = a[i]
        if x == 0:
            continue
        for j in range(N):
            y = b[j]
            if y != 0:
                out[table[i, j]] += x * y
    return out_arr


def left_multiply_rows(const i64[:] a, const i64[:, :] rows, const int[:, :] table):
    cdef Py_ssize_t N = a.shape[0], m = rows.shape[0], i, j, r
    cdef i64 x, y
    out_arr = np.zeros((m, N), dtype=np.int64)
    cdef i64[:, :] out = out_arr
    for i in range(N):
        x = a[i]
        if x == 0:
            continue
        for r in range(m):
            for j in range(N):
                y = rows[r, j]
                if y != 0:
                    out[r, table[i, j]] += x * y
    return out_arr


cdef inline i64 _gcd(i64 a, i64 b) nogil:
    a = llabs(a)
    b = llabs(b)
    while b:
        a, b = b, a % b
    return a


cdef void _normalize(i64[:] v, Py_ssize_t q) noexcept nogil:
    cdef Py_ssize_t N = v.shape[0], k
    cdef i64 g = 0
    for k in range(N):
        if v[k] != 0:
            g = _gcd(g, v[k])
            if g == 1:
                break
    if v[q] < 0:
        g = -g
    if g != 1 and g != 0:
        for k in range(N):
            v[k] = v[k] // g


cdef int _combine(i64[:] v, const i64[:] b, Py_ssize_t p) noexcept nogil:
    # v <- f1*v - f2*b with v[p] eliminated; returns 1 on overflow
    cdef Py_ssize_t N = v.shape[0], k
    cdef i64 g = _gcd(b[p], v[p])
    cdef i64 f1 = b[p] // g, f2 = v[p] // g, big = 0, x
    for k in range(N):
        x = f1 * v[k] - f2 * b[k]
        v[k] = x
        if llabs(x) > big:
            big = llabs(x)
    if big > SOFT:
        for k in range(N):
            if v[k] != 0:
                _normalize(v, k)
                break
        big = 0
        for k in range(N):
            if llabs(v[k]) > big:
                big = llabs(v[k])
        if big > LIMIT:
            return 1
    return 0


def rref_int(const i64[:, :] rows):
    cdef Py_ssize_t m = rows.shape[0], N = rows.shape[1]
    cdef Py_ssize_t cap = min(m, N)
    basis_arr = np.zeros((max(cap, 1), N), dtype=np.int64)
    piv_arr = np.zeros(max(cap, 1), dtype=np.intp)
    v_arr = np.zeros(N, dtype=np.int64)
    cdef i64[:, :] basis = basis_arr
    cdef Py_ssize_t[:] piv = piv_arr
    cdef i64[:] v = v_arr
    cdef Py_ssize_t rank = 0, r, k, q, col
    cdef i64 x
    for r in range(m):
        if rank == N:
            break
        for col in range(N):
            x = rows[r, col]
            if llabs(x) > LIMIT:
                raise OverflowError("input entry too large for the int64 kernel")
            v[col] = x
        for k in range(rank):
            if v[piv[k]] != 0:
                if _combine(v, basis[k], piv[k]):
                    raise OverflowError("row reduction left the int64 range")
        q = -1
        for col in range(N):
            if v[col] != 0:
                q = col
                break
        if q < 0:
            continue
        _normalize(v, q)
        for k in range(rank):
            if basis[k, q] != 0:
                if _combine(basis[k], v, q):
                    raise OverflowError("row reduction left the int64 range")
                _normalize(basis[k], piv[k])
        basis[rank, :] = v
        piv[rank] = q
        rank += 1
    for k in range(rank):
        _normalize(basis[k], piv[k])
    order = np.argsort(piv_arr[:rank], kind="stable")
    return basis_arr[order].tolist(), piv_arr[order].tolist()

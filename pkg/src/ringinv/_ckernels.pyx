# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exhaustive-search kernels over Cayley tables.

Mirrors ``ringinv._pykernels`` exactly; see that module for the contracts.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def mat_tables(int k, int p):
    cdef int kk = k * k
    cdef Py_ssize_t n = 1
    cdef int t
    for t in range(kk):
        n *= p
    digits_np = np.zeros((n, kk), dtype=np.int32)
    cdef int[:, :] dg = digits_np
    cdef Py_ssize_t i, j
    cdef long long rem
    for i in range(n):
        rem = i
        for t in range(kk - 1, -1, -1):
            dg[i, t] = rem % p
            rem //= p
    add_np = np.empty((n, n), dtype=np.int32)
    mul_np = np.empty((n, n), dtype=np.int32)
    cdef int[:, :] add = add_np
    cdef int[:, :] mul = mul_np
    cdef int r, c, s
    cdef long long acc, code_add, code_mul
    for i in range(n):
        for j in range(n):
            code_add = 0
            code_mul = 0
            for r in range(k):
                for c in range(k):
                    code_add = code_add * p + (dg[i, r * k + c] + dg[j, r * k + c]) % p
                    acc = 0
                    for s in range(k):
                        acc += dg[i, r * k + s] * dg[j, s * k + c]
                    code_mul = code_mul * p + acc % p
            add[i, j] = <int>code_add
            mul[i, j] = <int>code_mul
    return add_np, mul_np


def along_table(mul_in, rid_in, lid_in):
    cdef int[:, :] mul = np.ascontiguousarray(mul_in, dtype=np.int32)
    cdef int[:] rid = np.ascontiguousarray(rid_in, dtype=np.int32)
    cdef int[:] lid = np.ascontiguousarray(lid_in, dtype=np.int32)
    cdef Py_ssize_t n = mul.shape[0]
    inv_np = np.full((n, n), -1, dtype=np.int32)
    count_np = np.zeros((n, n), dtype=np.int32)
    cdef int[:, :] inv = inv_np
    cdef int[:, :] count = count_np
    cdef Py_ssize_t a, b, d
    for d in range(n):
        for b in range(n):
            if rid[b] != rid[d] or lid[b] != lid[d]:
                continue
            for a in range(n):
                if mul[mul[b, a], b] == b:
                    count[a, d] += 1
                    if inv[a, d] < 0:
                        inv[a, d] = <int>b
    return inv_np, count_np


def along_search(mul_in, rid_in, lid_in, Py_ssize_t a, Py_ssize_t d):
    cdef int[:, :] mul = np.ascontiguousarray(mul_in, dtype=np.int32)
    cdef int[:] rid = np.ascontiguousarray(rid_in, dtype=np.int32)
    cdef int[:] lid = np.ascontiguousarray(lid_in, dtype=np.int32)
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t b
    found = []
    for b in range(n):
        if rid[b] == rid[d] and lid[b] == lid[d] and mul[mul[b, a], b] == b:
            found.append(b)
    return found


def group_table(mul_in):
    cdef int[:, :] mul = np.ascontiguousarray(mul_in, dtype=np.int32)
    cdef Py_ssize_t n = mul.shape[0]
    inv_np = np.full(n, -1, dtype=np.int32)
    count_np = np.zeros(n, dtype=np.int32)
    cdef int[:] inv = inv_np
    cdef int[:] count = count_np
    cdef Py_ssize_t a, b
    cdef int ab
    for a in range(n):
        for b in range(n):
            ab = mul[a, b]
            if ab == mul[b, a] and mul[ab, a] == a and mul[mul[b, a], b] == b:
                count[a] += 1
                if inv[a] < 0:
                    inv[a] = <int>b
    return inv_np, count_np

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice kernels; same contract as ``_pykernels``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def prepare(table):
    return np.ascontiguousarray(table, dtype=np.int32)


def closure(const int[:, ::1] table, start, gens, Py_ssize_t n):
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] member = np.zeros(n, dtype=np.uint8)
    cdef cnp.ndarray[int, ndim=1] queue = np.empty(n, dtype=np.int32)
    cdef int[::1] g = np.ascontiguousarray(gens, dtype=np.int32)
    cdef int[::1] s = np.ascontiguousarray(start, dtype=np.int32)
    cdef Py_ssize_t head = 0, tail = 0, k, ng = g.shape[0]
    cdef int a, b
    for k in range(s.shape[0]):
        if not member[s[k]]:
            member[s[k]] = 1
            queue[tail] = s[k]
            tail += 1
    while head < tail:
        a = queue[head]
        head += 1
        for k in range(ng):
            b = table[a, g[k]]
            if not member[b]:
                member[b] = 1
                queue[tail] = b
                tail += 1
    return member


def normalizer(const int[:, ::1] table, inv, member, gens, Py_ssize_t n):
    cdef const int[::1] iv = np.ascontiguousarray(inv, dtype=np.int32)
    cdef const cnp.uint8_t[::1] mem = np.ascontiguousarray(member, dtype=np.uint8)
    cdef int[::1] g = np.ascontiguousarray(gens, dtype=np.int32)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] out = np.zeros(n, dtype=np.uint8)
    cdef Py_ssize_t x, k, ng = g.shape[0]
    cdef int ok
    for x in range(n):
        ok = 1
        for k in range(ng):
            if not mem[table[table[iv[x], g[k]], x]]:
                ok = 0
                break
        out[x] = ok
    return out

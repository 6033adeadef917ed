# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled section-count kernels; same contract as ``_pycore``."""

import numpy as np
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

BACKEND = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def popcounts(const uint64_t[:, ::1] zsets):
    cdef Py_ssize_t h, w
    cdef Py_ssize_t H = zsets.shape[0], W = zsets.shape[1]
    out = np.zeros(H, dtype=np.int64)
    cdef int64_t[::1] o = out
    cdef int64_t c
    with nogil:
        for h in range(H):
            c = 0
            for w in range(W):
                c += __builtin_popcountll(zsets[h, w])
            o[h] = c
    return out


cdef int64_t _dfs(const uint64_t[:, ::1] z, int64_t** rows, int64_t* lens, int r, int t,
                  uint64_t* acc, Py_ssize_t W, int64_t best) noexcept nogil:
    cdef uint64_t* prev = acc + t * W
    cdef uint64_t* cur = acc + (t + 1) * W
    cdef int64_t a, h, cnt
    cdef Py_ssize_t w
    for a in range(lens[t]):
        h = rows[t][a]
        cnt = 0
        for w in range(W):
            cur[w] = prev[w] & z[h, w]
            cnt += __builtin_popcountll(cur[w])
        if cnt <= best:
            continue
        if t == r - 1:
            best = cnt
        else:
            best = _dfs(z, rows, lens, r, t + 1, acc, W, best)
    return best


def max_section(zsets, full_mask, blocks, long long best=-1):
    cdef const uint64_t[:, ::1] z = np.ascontiguousarray(zsets, dtype=np.uint64)
    cdef const uint64_t[::1] full = np.ascontiguousarray(full_mask, dtype=np.uint64)
    cdef Py_ssize_t W = z.shape[1]
    cdef int r, t
    cdef Py_ssize_t w
    cdef int64_t** rows
    cdef int64_t* lens
    cdef uint64_t* acc
    cdef int64_t[::1] view
    for block in blocks:
        r = len(block)
        if r == 0:
            continue
        arrays = [np.ascontiguousarray(level, dtype=np.int64) for level in block]
        rows = <int64_t**> malloc(r * sizeof(int64_t*))
        lens = <int64_t*> malloc(r * sizeof(int64_t))
        acc = <uint64_t*> malloc((r + 1) * W * sizeof(uint64_t))
        if rows == NULL or lens == NULL or acc == NULL:
            free(rows); free(lens); free(acc)
            raise MemoryError()
        try:
            for t in range(r):
                view = arrays[t]
                lens[t] = view.shape[0]
                rows[t] = &view[0] if view.shape[0] else NULL
            for w in range(W):
                acc[w] = full[w]
            with nogil:
                best = _dfs(z, rows, lens, r, 0, acc, W, best)
        finally:
            free(rows); free(lens); free(acc)
    return best

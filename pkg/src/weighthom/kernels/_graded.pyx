# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p graded reduction kernels.

Same contract as ``_graded_py.reduce_graded_modp`` / ``rank_modp``; p must
be a prime below 2**31 so products fit in int64.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()


cdef inline int64_t _inv_mod(int64_t a, int64_t p):
    cdef int64_t t = 0, newt = 1, r = p, newr = a % p, q, tmp
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


def reduce_graded_modp(int64_t[:, ::1] ct, int64_t[::1] row_w, int64_t[::1] col_w,
                       int64_t[::1] pos, int64_t p):
    cdef Py_ssize_t nc = ct.shape[0]
    cdef Py_ssize_t nr = ct.shape[1]
    cdef Py_ssize_t c, c2, r, i, br, bc
    cdef int64_t v, bv, bpos, f, pinv, y
    tt_arr = np.zeros((nc, nc), dtype=np.int64)
    cdef int64_t[:, ::1] tt = tt_arr
    rem_arr = np.ones(nc, dtype=np.uint8)
    cdef unsigned char[::1] remaining = rem_arr
    for c in range(nc):
        tt[c, c] = 1
    pivots = []
    while True:
        bc = -1
        br = -1
        bv = 0
        bpos = 0
        for c in range(nc):
            if not remaining[c]:
                continue
            for r in range(nr):
                if ct[c, r] != 0:
                    v = row_w[r] - col_w[c]
                    if (bc < 0 or v < bv or (v == bv and r < br)
                            or (v == bv and r == br and pos[c] < bpos)):
                        bv = v
                        br = r
                        bc = c
                        bpos = pos[c]
        if bc < 0:
            break
        remaining[bc] = 0
        pivots.append((br, bc))
        pinv = _inv_mod(ct[bc, br], p)
        for c2 in range(nc):
            if not remaining[c2] or ct[c2, br] == 0:
                continue
            f = (ct[c2, br] * pinv) % p
            for i in range(nr):
                y = ct[bc, i]
                if y != 0:
                    ct[c2, i] = (ct[c2, i] + p - (f * y) % p) % p
            for i in range(nc):
                y = tt[bc, i]
                if y != 0:
                    tt[c2, i] = (tt[c2, i] + p - (f * y) % p) % p
    return pivots, tt_arr


def rank_modp(a, int64_t p):
    work = np.ascontiguousarray(np.asarray(a, dtype=np.int64) % p)
    if work.ndim != 2 or work.shape[0] == 0 or work.shape[1] == 0:
        return 0
    cdef int64_t[:, ::1] m = work
    cdef Py_ssize_t nr = m.shape[0], nc = m.shape[1]
    cdef Py_ssize_t rank = 0, i, j, k, piv
    cdef int64_t inv, f, tmp
    for j in range(nc):
        piv = -1
        for i in range(rank, nr):
            if m[i, j] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(j, nc):
                tmp = m[piv, k]
                m[piv, k] = m[rank, k]
                m[rank, k] = tmp
        inv = _inv_mod(m[rank, j], p)
        for i in range(rank + 1, nr):
            if m[i, j] != 0:
                f = (m[i, j] * inv) % p
                for k in range(j, nc):
                    if m[rank, k] != 0:
                        m[i, k] = (m[i, k] + p - (f * m[rank, k]) % p) % p
        rank += 1
        if rank == nr:
            break
    return rank

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mixture-reconstruction kernel.

Accumulates sum_k w_k |v_k><v_k| into ``out``, where v_k is the Kronecker
product of the k-th row of ``factors`` (leftmost factor most significant).
Rows of a term chunk are tensored in place in a scratch block with plain C
loops, then the whole chunk is folded into ``out`` by one BLAS-3 zgemm.
Chunks are processed sequentially so the summation order is deterministic.
"""

import numpy as np

from scipy.linalg.cython_blas cimport zgemm

# Scratch block cap in complex entries (~4 MB per buffer).
DEF CHUNK_ENTRIES = 262144


def reconstruct_mixture(const double[::1] weights,
                        const double complex[:, :, ::1] factors,
                        double complex[:, ::1] out):
    cdef Py_ssize_t nterms = weights.shape[0]
    cdef Py_ssize_t nfac = factors.shape[1]
    cdef Py_ssize_t d = factors.shape[2]
    cdef Py_ssize_t dim = out.shape[0]
    cdef Py_ssize_t chunk, rows, lo, k, r, i, j, cur
    cdef double complex va
    cdef double complex alpha = 1.0
    cdef double complex beta = 1.0
    cdef double w
    cdef int bm, bn, bk, ld
    if nterms == 0:
        return
    chunk = CHUNK_ENTRIES // dim
    if chunk < 1:
        chunk = 1
    if chunk > nterms:
        chunk = nterms
    v_block = np.empty((chunk, dim), dtype=np.complex128)
    wv_block = np.empty((chunk, dim), dtype=np.complex128)
    cdef double complex[:, ::1] v = v_block
    cdef double complex[:, ::1] wv = wv_block
    lo = 0
    while lo < nterms:
        rows = nterms - lo
        if rows > chunk:
            rows = chunk
        with nogil:
            for k in range(rows):
                for j in range(d):
                    v[k, j] = factors[lo + k, 0, j]
                cur = d
                for r in range(1, nfac):
                    # In-place backward Kronecker extension: block i of the
                    # new vector starts at i*d >= i+1 for i >= 1, so no
                    # unread source entry is ever overwritten.
                    for i in range(cur - 1, -1, -1):
                        va = v[k, i]
                        for j in range(d - 1, -1, -1):
                            v[k, i * d + j] = va * factors[lo + k, r, j]
                    cur = cur * d
                w = weights[lo + k]
                for j in range(dim):
                    wv[k, j] = w * v[k, j]
        # Row-major (rows, dim) blocks read as Fortran are V^T and (wV)^T,
        # so C += V^T * conj(wV) lands sum_k w_k v[k,a] conj(v[k,b]) at
        # Fortran (a, b), i.e. transposed in the row-major view of ``out``.
        bm = <int> dim
        bn = <int> dim
        bk = <int> rows
        ld = <int> dim
        zgemm(b"N", b"C", &bm, &bn, &bk, &alpha, &v[0, 0], &ld,
              &wv[0, 0], &ld, &beta, &out[0, 0], &ld)
        lo += rows
    with nogil:
        for i in range(dim):
            for j in range(i + 1, dim):
                va = out[i, j]
                out[i, j] = out[j, i]
                out[j, i] = va

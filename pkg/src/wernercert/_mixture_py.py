"""Pure numpy implementation of the mixture-reconstruction kernel.

Semantically identical to the compiled extension: given K weights and
K x n x d local state vectors, accumulate sum_k w_k |v_k><v_k| where v_k is
the Kronecker product of the k-th row of factors (leftmost factor most
significant).  Terms are processed in fixed chunks so the summation order,
and therefore the result, is deterministic.
"""

from __future__ import annotations

import numpy as np

# Bound on stacked tensored-vector entries per chunk (~32 MB of complex128).
_CHUNK_ENTRIES = 1 << 21


def reconstruct_mixture(weights: np.ndarray, factors: np.ndarray) -> np.ndarray:
    w = np.asarray(weights, dtype=np.float64)
    f = np.asarray(factors, dtype=np.complex128)
    nterms, nfac, d = f.shape
    dim = d**nfac
    out = np.zeros((dim, dim), dtype=np.complex128)
    step = max(1, _CHUNK_ENTRIES // dim)
    for lo in range(0, nterms, step):
        hi = min(nterms, lo + step)
        v = f[lo:hi, 0, :]
        for r in range(1, nfac):
            v = (v[:, :, None] * f[lo:hi, r, :][:, None, :]).reshape(hi - lo, -1)
        out += (w[lo:hi, None] * v).T @ v.conj()
    return out

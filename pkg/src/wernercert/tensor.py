"""Multi-index bookkeeping and dense complex-matrix primitives.

All matrices are plain ``numpy.ndarray`` objects in the computational
product basis of n qudits with local dimension d.  The basis ordering is
big-endian: the leftmost qudit is the most significant base-d digit of the
linear index, so the all-equal string (j, ..., j) maps to
j * (d**n - 1) / (d - 1).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from .errors import CapacityError, ContractViolationError, InvalidIndexError, InvalidParameterError

# Dense desk-scale defaults; construction is exact up to rounding, so the
# tolerances sit well below any physical scale of the problem.
DEFAULT_DIM_CAP = 4096
HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-9


def encode_index(digits: Sequence[int], d: int) -> int:
    """Linear index of a base-d digit tuple, big-endian.

    Bijective from [0, d)**n onto [0, d**n).
    """
    if d < 1:
        raise InvalidParameterError(f"local dimension must be >= 1, got {d}")
    idx = 0
    for r, dig in enumerate(digits):
        if not 0 <= dig < d:
            raise InvalidIndexError(f"digit {dig} at position {r} is out of range [0, {d})")
        idx = idx * d + dig
    return idx


def decode_index(index: int, d: int, n: int) -> tuple[int, ...]:
    """Inverse of :func:`encode_index` for a fixed shape (d, n)."""
    if d < 1 or n < 1:
        raise InvalidParameterError(f"invalid shape d={d}, n={n}")
    if not 0 <= index < d**n:
        raise InvalidIndexError(f"linear index {index} out of range [0, {d**n})")
    digits = [0] * n
    for r in range(n - 1, -1, -1):
        index, digits[r] = divmod(index, d)
    return tuple(digits)


def kron(a: np.ndarray, b: np.ndarray, dim_cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Kronecker product with a guard on the output size."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 2:
        raise InvalidParameterError("kron expects two matrices")
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if max(rows, cols) > dim_cap:
        raise CapacityError(f"kron output {rows}x{cols} exceeds the dimension cap {dim_cap}")
    return np.kron(a, b)


def kron_vec(vectors: Iterable[np.ndarray], dim_cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Tensor product of a sequence of vectors, leftmost factor most significant."""
    out = None
    for v in vectors:
        v = np.asarray(v).ravel()
        if out is None:
            out = v.astype(complex)
            continue
        if out.size * v.size > dim_cap:
            raise CapacityError(f"tensored vector of length {out.size * v.size} exceeds the dimension cap {dim_cap}")
        out = (out[:, None] * v[None, :]).ravel()
    if out is None:
        raise InvalidParameterError("empty factor list")
    return out


def partial_transpose(rho: np.ndarray, subsystems: Iterable[int], d: int, n: int) -> np.ndarray:
    """Transpose the indicated tensor factors of a d**n x d**n matrix.

    Involutive and trace-preserving.  An empty position set is a documented
    no-op that returns the input unchanged.
    """
    rho = np.asarray(rho)
    dim = d**n
    if rho.shape != (dim, dim):
        raise InvalidParameterError(f"matrix shape {rho.shape} does not match d**n = {dim}")
    positions = sorted(set(subsystems))
    if positions and not (0 <= positions[0] and positions[-1] < n):
        raise InvalidParameterError(f"subsystem positions {positions} outside [0, {n})")
    if not positions:
        return rho
    perm = list(range(2 * n))
    for p in positions:
        perm[p], perm[n + p] = perm[n + p], perm[p]
    return rho.reshape((d,) * (2 * n)).transpose(perm).reshape(dim, dim)


def eig_min_hermitian(m: np.ndarray, hermitian_tol: float = HERMITIAN_TOL) -> float:
    """Smallest eigenvalue of a Hermitian matrix.

    Raises if the input deviates from Hermiticity by more than
    ``hermitian_tol`` in any entry.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidParameterError(f"expected a square matrix, got shape {m.shape}")
    dev = np.abs(m - m.conj().T).max()
    if dev > hermitian_tol:
        raise ContractViolationError(f"matrix is not Hermitian: max |M - M^dag| = {dev:.3e}")
    return float(np.linalg.eigvalsh(m)[0])


def check_density(
    rho: np.ndarray,
    hermitian_tol: float = HERMITIAN_TOL,
    trace_tol: float = TRACE_TOL,
    psd_tol: float = PSD_TOL,
) -> None:
    """Validate the density-matrix contract: Hermitian, unit trace, PSD."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ContractViolationError(f"density matrix must be square, got shape {rho.shape}")
    dev = np.abs(rho - rho.conj().T).max()
    if dev > hermitian_tol:
        raise ContractViolationError(f"not Hermitian: max |M - M^dag| = {dev:.3e}")
    tr = rho.trace()
    if abs(tr - 1.0) > trace_tol:
        raise ContractViolationError(f"trace {tr} deviates from 1 beyond {trace_tol}")
    lo = float(np.linalg.eigvalsh(rho)[0])
    if lo < -psd_tol:
        raise ContractViolationError(f"not PSD: minimum eigenvalue {lo:.3e}")

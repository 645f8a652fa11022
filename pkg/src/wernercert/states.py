"""Constructors for the Werner family and its phase-generalized relatives."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from .errors import CapacityError, ContractViolationError, InvalidParameterError
from .tensor import DEFAULT_DIM_CAP, encode_index

UNIT_MODULUS_TOL = 1e-12


def check_unit_phases(zeta: Sequence[complex], tol: float = UNIT_MODULUS_TOL) -> np.ndarray:
    """Return ``zeta`` as a complex array after checking every entry has modulus 1."""
    z = np.asarray(zeta, dtype=complex).ravel()
    if z.size == 0:
        raise InvalidParameterError("phase vector must be nonempty")
    dev = np.abs(np.abs(z) - 1.0).max()
    if dev > tol:
        raise ContractViolationError(f"phase entries must have unit modulus: worst deviation {dev:.3e}")
    return z


def _check_shape(d: int, n: int, dim_cap: int, min_n: int = 1) -> int:
    if d < 2:
        raise InvalidParameterError(f"local dimension must be >= 2, got {d}")
    if n < min_n:
        raise InvalidParameterError(f"qudit count must be >= {min_n}, got {n}")
    dim = d**n
    if dim > dim_cap:
        raise CapacityError(f"total dimension {dim} exceeds the dimension cap {dim_cap}")
    return dim


def ghz_state(d: int, n: int, dim_cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Uniform superposition of the all-equal basis strings, (1/sqrt d) sum_j |j...j>."""
    dim = _check_shape(d, n, dim_cap)
    psi = np.zeros(dim, dtype=complex)
    amp = 1.0 / math.sqrt(d)
    for j in range(d):
        psi[encode_index((j,) * n, d)] = amp
    return psi


def werner_state(d: int, n: int, s: float, dim_cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Mixture (1 - s)/d**n * I + s * |Psi><Psi| of noise and the GHZ projector."""
    s = float(s)
    if not 0.0 <= s <= 1.0:
        raise InvalidParameterError(f"mixing weight s must lie in [0, 1], got {s}")
    dim = _check_shape(d, n, dim_cap, min_n=2)
    psi = ghz_state(d, n, dim_cap)
    rho = np.outer(psi, psi.conj())
    rho *= s
    rho[np.diag_indices(dim)] += (1.0 - s) / dim
    return rho


def phase_family_density(
    d: int,
    n: int,
    zeta: Sequence[complex] | None = None,
    dim_cap: int = DEFAULT_DIM_CAP,
) -> np.ndarray:
    """Density (1/d**n)(I + sum_{j != k} zeta_j zeta_k* |j...j><k...k|).

    ``zeta`` defaults to all ones.  For n = 1 this is a rank-1 projector;
    for n >= 2 positivity is certified by its separable decomposition rather
    than checked here.
    """
    dim = _check_shape(d, n, dim_cap)
    if zeta is None:
        z = np.ones(d, dtype=complex)
    else:
        z = check_unit_phases(zeta)
        if z.size != d:
            raise InvalidParameterError(f"expected {d} phases, got {z.size}")
    rho = np.zeros((dim, dim), dtype=complex)
    rho[np.diag_indices(dim)] = 1.0 / dim
    diag_strings = [encode_index((j,) * n, d) for j in range(d)]
    for j in range(d):
        for k in range(d):
            if j != k:
                rho[diag_strings[j], diag_strings[k]] = z[j] * z[k].conjugate() / dim
    return rho


def phase_state(z: Sequence[complex]) -> np.ndarray:
    """Local pure state (1/sqrt d)(z_0, ..., z_{d-1}) from unit-modulus phases.

    Its outer product is the base case of the separability induction; it is a
    projector for any choice of the phases.
    """
    zv = check_unit_phases(z)
    return zv / math.sqrt(zv.size)

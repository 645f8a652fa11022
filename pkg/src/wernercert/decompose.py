"""Explicit separable decompositions for the phase family and Werner states.

The construction follows the inductive proof behind the exact threshold:
the phase-family density on t+1 qudits is the uniform mixture, over the
4**d phase vectors z, of the t-qudit family with phases multiplied by z,
tensored with the pure local state built from the conjugate of z.  The new
qudit is appended as the LAST tensor factor; unrolling the recursion turns
a sequence (m_1, ..., m_{n-1}) of phase-vector indices into one pure
product term, so the flattened certificate has 4**(d*(n-1)) equal weights.

Weight bookkeeping is exact: every weight is a Fraction, so certificate
weights sum to 1 exactly and only become floats at serialization.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

import numpy as np

from .certificate import DEFAULT_TERM_CAP, ProductTerm, SeparableCertificate
from .criteria import separability_threshold
from .errors import CapacityError, InvalidParameterError, ThresholdExceededError
from .phases import DEFAULT_ENUM_CAP, enumerate_phase_vectors
from .states import check_unit_phases


def _as_fraction(s) -> Fraction:
    """Exact rational view of a mixing weight given as Fraction, str, float, or int."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, str):
        return Fraction(s)
    return Fraction(s)


def _basis_vector(d: int, x: int) -> np.ndarray:
    e = np.zeros(d, dtype=np.complex128)
    e[x] = 1.0
    return e


def decompose_phase_family(
    d: int,
    n: int,
    zeta=None,
    term_cap: int = DEFAULT_TERM_CAP,
) -> SeparableCertificate:
    """Flattened separable decomposition of the phase-family density.

    Term order is canonical: lexicographic over the index sequence
    (m_1, ..., m_{n-1}), each index enumerating phase vectors in their
    canonical order.  Every term has weight 4**(-d*(n-1)).
    """
    if d < 2:
        raise InvalidParameterError(f"local dimension must be >= 2, got {d}")
    if n < 1:
        raise InvalidParameterError(f"qudit count must be >= 1, got {n}")
    count = 4 ** (d * (n - 1))
    if count > term_cap:
        raise CapacityError(f"decomposition needs {count} terms, exceeding the cap {term_cap}")
    if zeta is None:
        zeta_arr = np.ones(d, dtype=np.complex128)
    else:
        zeta_arr = check_unit_phases(zeta)
        if zeta_arr.size != d:
            raise InvalidParameterError(f"expected {d} phases, got {zeta_arr.size}")
    inv_sqrt_d = 1.0 / math.sqrt(d)
    vectors = enumerate_phase_vectors(d, enum_cap=max(DEFAULT_ENUM_CAP, term_cap))
    values = [pv.values() for pv in vectors]
    conj_states = [v.conj() * inv_sqrt_d for v in values]
    weight = Fraction(1, count)
    terms = []
    for seq in product(range(len(vectors)), repeat=n - 1):
        head = zeta_arr.copy()
        for m in seq:
            head *= values[m]
        factors = (head * inv_sqrt_d,) + tuple(conj_states[m] for m in seq)
        terms.append(ProductTerm(weight=weight, factors=factors))
    target = {
        "family": "phase_family",
        "d": d,
        "n": n,
        "zeta": [[float(z.real), float(z.imag)] for z in zeta_arr],
    }
    return SeparableCertificate(d=d, n=n, terms=tuple(terms), target=target)


def decompose_werner(d: int, n: int, s, term_cap: int = DEFAULT_TERM_CAP) -> SeparableCertificate:
    """Explicit separable decomposition of the Werner state at or below threshold.

    Three term groups, in canonical order: (a) the d all-equal basis
    projectors carrying total weight s, (b) the flattened phase-family
    terms carrying total weight (s/s*) * (1 - s*), and (c), for s strictly
    below the threshold s*, the d**n computational-basis product terms
    absorbing the leftover identity weight 1 - s/s*.  Groups whose total
    weight is zero are omitted, so every emitted weight is positive.
    """
    if d < 2 or n < 2:
        raise InvalidParameterError(f"Werner decomposition requires d >= 2 and n >= 2, got d={d}, n={n}")
    s_frac = _as_fraction(s)
    if not 0 <= s_frac <= 1:
        raise InvalidParameterError(f"mixing weight s must lie in [0, 1], got {s_frac}")
    s_star = separability_threshold(d, n)
    if s_frac > s_star:
        raise ThresholdExceededError(
            f"s = {s_frac} exceeds the separability threshold {s_star} "
            f"= 1/(1 + {d}**{n - 1}); no separable decomposition exists",
            bound=s_star,
        )
    ratio = s_frac / s_star
    required = 0
    if ratio > 0:
        required += d + 4 ** (d * (n - 1))
    if ratio < 1:
        required += d**n
    if required > term_cap:
        raise CapacityError(f"certificate needs {required} terms, exceeding the cap {term_cap}")

    terms: list[ProductTerm] = []
    if ratio > 0:
        diag_weight = s_frac / d
        for j in range(d):
            e = _basis_vector(d, j)
            terms.append(ProductTerm(weight=diag_weight, factors=(e,) * n))
        family = decompose_phase_family(d, n, term_cap=term_cap)
        scale = ratio * (1 - s_star)
        terms.extend(
            ProductTerm(weight=t.weight * scale, factors=t.factors) for t in family.terms
        )
    if ratio < 1:
        noise_weight = (1 - ratio) / d**n
        basis = [_basis_vector(d, x) for x in range(d)]
        for string in product(range(d), repeat=n):
            terms.append(
                ProductTerm(weight=noise_weight, factors=tuple(basis[x] for x in string))
            )
    target = {"family": "werner", "d": d, "n": n, "s": str(s_frac)}
    return SeparableCertificate(d=d, n=n, terms=tuple(terms), target=target)

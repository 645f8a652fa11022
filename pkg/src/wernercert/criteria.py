"""Necessary separability conditions for the Werner family.

Three detectors live here: the exact threshold rational, the
Cauchy-Schwarz element inequality on index quadruples, and the Peres
partial-transpose spectrum test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

import numpy as np

from .errors import InvalidParameterError
from .states import werner_state
from .tensor import encode_index, eig_min_hermitian, partial_transpose


def separability_threshold(d: int, n: int) -> Fraction:
    """Exact full-separability boundary 1 / (1 + d**(n-1))."""
    if d < 2 or n < 2:
        raise InvalidParameterError(f"threshold requires d >= 2 and n >= 2, got d={d}, n={n}")
    return Fraction(1, 1 + d ** (n - 1))


@dataclass(frozen=True)
class IndexQuadruple:
    """Indices (j, k, u, v) with j and k differing in every component and
    (u_r, v_r) a componentwise rearrangement of (j_r, k_r)."""

    j: tuple[int, ...]
    k: tuple[int, ...]
    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        n = len(self.j)
        if n == 0 or not (len(self.k) == len(self.u) == len(self.v) == n):
            raise InvalidParameterError("quadruple members must share a nonzero length")
        for r in range(n):
            if self.j[r] == self.k[r]:
                raise InvalidParameterError(f"j and k agree in component {r}")
            if self.u[r] == self.v[r]:
                raise InvalidParameterError(f"u and v agree in component {r}")
            if {self.u[r], self.v[r]} != {self.j[r], self.k[r]}:
                raise InvalidParameterError(f"(u, v) is not a rearrangement of (j, k) in component {r}")

    @property
    def n(self) -> int:
        return len(self.j)


def cauchy_schwarz_margin(rho: np.ndarray, quad: IndexQuadruple, d: int, n: int) -> float:
    """Margin sqrt(rho_jj * rho_kk) - |rho_uv|; nonnegative for fully separable states."""
    rho = np.asarray(rho)
    if quad.n != n:
        raise InvalidParameterError(f"quadruple has {quad.n} components, expected {n}")
    ej = encode_index(quad.j, d)
    ek = encode_index(quad.k, d)
    eu = encode_index(quad.u, d)
    ev = encode_index(quad.v, d)
    if rho.shape != (d**n, d**n):
        raise InvalidParameterError(f"matrix shape {rho.shape} does not match d**n = {d**n}")
    pjj = max(rho[ej, ej].real, 0.0)
    pkk = max(rho[ek, ek].real, 0.0)
    return math.sqrt(pjj * pkk) - abs(rho[eu, ev])


def witness_quadruple(d: int, n: int) -> IndexQuadruple:
    """Canonical quadruple that binds exactly at the Werner threshold.

    j and k are complementary non-constant 0/1 strings, u and v the constant
    strings, so the margin of W(s) is (1-s)/d**n - s/d.
    """
    if d < 2 or n < 2:
        raise InvalidParameterError(f"witness requires d >= 2 and n >= 2, got d={d}, n={n}")
    j = (0,) + (1,) * (n - 1)
    k = (1,) + (0,) * (n - 1)
    return IndexQuadruple(j, k, (0,) * n, (1,) * n)


def iter_quadruples(d: int, n: int, full_scan: bool = False) -> Iterator[IndexQuadruple]:
    """Candidate quadruples in a canonical deterministic order.

    The default scan restricts j, k to complementary patterns over two
    symbols a != b, which by permutation symmetry of the Werner family
    carries all binding constraints; u is chosen by a componentwise swap
    mask.  The full scan enumerates every admissible quadruple and is meant
    only for small-shape validation.
    """
    if d < 2 or n < 1:
        raise InvalidParameterError(f"invalid shape d={d}, n={n}")
    if full_scan:
        for j in product(range(d), repeat=n):
            others = [[x for x in range(d) if x != jr] for jr in j]
            for k in product(*others):
                for mask in range(2**n):
                    u = tuple(k[r] if mask >> r & 1 else j[r] for r in range(n))
                    v = tuple(j[r] if mask >> r & 1 else k[r] for r in range(n))
                    yield IndexQuadruple(j, k, u, v)
        return
    for a in range(d):
        for b in range(a + 1, d):
            for jmask in range(2**n):
                j = tuple(b if jmask >> r & 1 else a for r in range(n))
                k = tuple(a if jmask >> r & 1 else b for r in range(n))
                for umask in range(2**n):
                    u = tuple(k[r] if umask >> r & 1 else j[r] for r in range(n))
                    v = tuple(j[r] if umask >> r & 1 else k[r] for r in range(n))
                    yield IndexQuadruple(j, k, u, v)


def worst_cs_margin(rho: np.ndarray, d: int, n: int, full_scan: bool = False) -> tuple[float, IndexQuadruple]:
    """Minimum Cauchy-Schwarz margin over the scan, with its witnessing quadruple."""
    worst: tuple[float, IndexQuadruple] | None = None
    for quad in iter_quadruples(d, n, full_scan):
        m = cauchy_schwarz_margin(rho, quad, d, n)
        if worst is None or m < worst[0]:
            worst = (m, quad)
    assert worst is not None
    return worst


def necessary_max_s(
    d: int,
    n: int,
    full_scan: bool = False,
    method: str = "closed-form",
    bisect_tol: float = 1e-13,
) -> float:
    """Largest s at which every Cauchy-Schwarz margin of W(s) is nonnegative.

    The closed-form path exploits that any margin which ever goes negative
    on [0, 1] is affine in s (a nonzero |rho_uv| forces constant u, v and
    equal j, k diagonals), so its zero crossing follows from the two
    endpoint values.  The bisection path is the slow validation oracle.
    """
    if d < 2 or n < 2:
        raise InvalidParameterError(f"scan requires d >= 2 and n >= 2, got d={d}, n={n}")
    if method == "closed-form":
        w0 = werner_state(d, n, 0.0)
        w1 = werner_state(d, n, 1.0)
        best = 1.0
        for quad in iter_quadruples(d, n, full_scan):
            m1 = cauchy_schwarz_margin(w1, quad, d, n)
            if m1 >= 0.0:
                continue
            m0 = cauchy_schwarz_margin(w0, quad, d, n)
            best = min(best, m0 / (m0 - m1))
        return best
    if method == "bisection":
        quads = list(iter_quadruples(d, n, full_scan))

        def all_nonnegative(s: float) -> bool:
            w = werner_state(d, n, s)
            return all(cauchy_schwarz_margin(w, q, d, n) >= 0.0 for q in quads)

        lo, hi = 0.0, 1.0
        if all_nonnegative(hi):
            return hi
        while hi - lo > bisect_tol:
            mid = 0.5 * (lo + hi)
            if all_nonnegative(mid):
                lo = mid
            else:
                hi = mid
        return lo
    raise InvalidParameterError(f"unknown method {method!r}")


def ppt_min_eig(rho: np.ndarray, cut, d: int, n: int) -> float:
    """Minimum eigenvalue of the partial transpose over the given cut.

    A nonnegative spectrum is necessary for separability across the cut.
    The cut must be a nonempty proper subset of the qudit positions.
    """
    positions = sorted(set(cut))
    if not positions or len(positions) >= n:
        raise InvalidParameterError(f"cut must be a nonempty proper subset of 0..{n - 1}, got {positions}")
    if positions[0] < 0 or positions[-1] >= n:
        raise InvalidParameterError(f"cut positions {positions} outside [0, {n})")
    return eig_min_hermitian(partial_transpose(rho, positions, d, n))

"""The fourth-roots-of-unity phase ensemble and its exact moment identities.

A phase vector is a length-d tuple with entries in {+1, -1, +i, -i}.  The
full ensemble of 4**d vectors has vanishing first and second moments per
slot, vanishing cross moments between distinct slots, and a fourth moment
that collapses to a Kronecker delta pair.  Those identities are what make
the inductive separable decomposition close, so they are computed here in
exact Gaussian-integer arithmetic: entries are (re, im) integer pairs and
no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .errors import CapacityError, InvalidParameterError

Gauss = tuple[int, int]

# Canonical symbol order; enumeration is lexicographic over this order.
SYMBOLS: tuple[Gauss, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))
SYMBOL_VALUES: tuple[complex, ...] = (1 + 0j, -1 + 0j, 1j, -1j)

# Enumeration cap: 4**d vectors, d <= 8 by default.
DEFAULT_ENUM_CAP = 65536


def _gmul(a: Gauss, b: Gauss) -> Gauss:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gconj(a: Gauss) -> Gauss:
    return (a[0], -a[1])


def _gadd(a: Gauss, b: Gauss) -> Gauss:
    return (a[0] + b[0], a[1] + b[1])


@dataclass(frozen=True)
class PhaseVector:
    """One member of the ensemble: symbol codes plus an optional fixed-phase multiplier.

    ``codes[r]`` indexes :data:`SYMBOLS`, keeping the base entries exact;
    ``zeta`` (unit phases, one per slot) is only applied when converting to
    floating-point values.
    """

    codes: tuple[int, ...]
    zeta: tuple[complex, ...] | None = None

    def __post_init__(self):
        if not self.codes:
            raise InvalidParameterError("phase vector must have at least one slot")
        if any(c not in (0, 1, 2, 3) for c in self.codes):
            raise InvalidParameterError(f"symbol codes must be in 0..3, got {self.codes}")
        if self.zeta is not None and len(self.zeta) != len(self.codes):
            raise InvalidParameterError("zeta length does not match slot count")

    @property
    def d(self) -> int:
        return len(self.codes)

    @property
    def units(self) -> tuple[Gauss, ...]:
        """Base entries as exact Gaussian integers (ignores ``zeta``)."""
        return tuple(SYMBOLS[c] for c in self.codes)

    def values(self) -> np.ndarray:
        """Complex entries, with ``zeta`` applied when present."""
        v = np.array([SYMBOL_VALUES[c] for c in self.codes], dtype=complex)
        if self.zeta is not None:
            v *= np.asarray(self.zeta, dtype=complex)
        return v


def enumerate_phase_vectors(d: int, enum_cap: int = DEFAULT_ENUM_CAP) -> list[PhaseVector]:
    """All 4**d phase vectors, lexicographic over the symbol order (+1, -1, +i, -i)."""
    if d < 1:
        raise InvalidParameterError(f"slot count must be >= 1, got {d}")
    count = 4**d
    if count > enum_cap:
        raise CapacityError(f"enumeration of 4**{d} = {count} phase vectors exceeds the cap {enum_cap}")
    return [PhaseVector(codes) for codes in product(range(4), repeat=d)]


@dataclass(frozen=True)
class MomentSums:
    """Exact per-slot ensemble sums: sum z_r, sum z_r**2, sum |z_r|**2."""

    first: tuple[Gauss, ...]
    second: tuple[Gauss, ...]
    abs_square: tuple[int, ...]

    @property
    def all_identities_hold(self) -> bool:
        expected = 4 ** len(self.first)
        return (
            all(g == (0, 0) for g in self.first)
            and all(g == (0, 0) for g in self.second)
            and all(a == expected for a in self.abs_square)
        )


def moment_sums(d: int, enum_cap: int = DEFAULT_ENUM_CAP) -> MomentSums:
    """First, second, and absolute-square moment sums over the full ensemble."""
    vectors = enumerate_phase_vectors(d, enum_cap)
    first = [(0, 0)] * d
    second = [(0, 0)] * d
    abs_square = [0] * d
    for pv in vectors:
        for r, g in enumerate(pv.units):
            first[r] = _gadd(first[r], g)
            second[r] = _gadd(second[r], _gmul(g, g))
            sq = _gmul(g, _gconj(g))
            abs_square[r] += sq[0]
    return MomentSums(tuple(first), tuple(second), tuple(abs_square))


def cross_moment_sum(d: int, r: int, s: int, enum_cap: int = DEFAULT_ENUM_CAP) -> Gauss:
    """Exact ensemble sum of z_r* z_s; vanishes for r != s by slot independence."""
    if not (0 <= r < d and 0 <= s < d):
        raise InvalidParameterError(f"slots must lie in [0, {d}), got r={r}, s={s}")
    total: Gauss = (0, 0)
    for pv in enumerate_phase_vectors(d, enum_cap):
        units = pv.units
        total = _gadd(total, _gmul(_gconj(units[r]), units[s]))
    return total


def fourth_moment(
    d: int, j: int, k: int, r: int, s: int, enum_cap: int = DEFAULT_ENUM_CAP
) -> tuple[Fraction, Fraction]:
    """Exact value of (1/4**d) sum_m z_j z_k* z_r* z_s for j != k and r != s.

    Equals delta(j, r) * delta(k, s); returned as an exact (re, im) pair of
    rationals computed by brute force over the whole ensemble.
    """
    for name, x in (("j", j), ("k", k), ("r", r), ("s", s)):
        if not 0 <= x < d:
            raise InvalidParameterError(f"index {name}={x} out of range [0, {d})")
    if j == k or r == s:
        raise InvalidParameterError("fourth moment requires j != k and r != s")
    total: Gauss = (0, 0)
    for pv in enumerate_phase_vectors(d, enum_cap):
        units = pv.units
        term = _gmul(units[j], _gconj(units[k]))
        term = _gmul(term, _gconj(units[r]))
        term = _gmul(term, units[s])
        total = _gadd(total, term)
    scale = 4**d
    return (Fraction(total[0], scale), Fraction(total[1], scale))

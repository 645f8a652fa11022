import itertools
from fractions import Fraction

import numpy as np
import pytest

from wernercert.criteria import separability_threshold
from wernercert.errors import ContractViolationError, InvalidParameterError
from wernercert.states import ghz_state, phase_family_density, phase_state, werner_state
from wernercert.tensor import check_density, encode_index


def test_ghz_qubit_pair():
    psi = ghz_state(2, 2)
    expected = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    assert np.abs(psi - expected).max() <= 1e-15


def test_ghz_qutrit_pair_support():
    psi = ghz_state(3, 2)
    nonzero = {i for i in range(9) if psi[i] != 0}
    assert nonzero == {0, 4, 8}
    for i in nonzero:
        assert abs(psi[i] - 1 / np.sqrt(3)) <= 1e-15


def test_ghz_normalized_on_grid():
    for d, n in [(2, 2), (2, 4), (3, 3), (5, 2)]:
        psi = ghz_state(d, n)
        assert abs(np.linalg.norm(psi) - 1.0) <= 1e-12
        # support is exactly the d repeated strings
        support = {i for i in range(d**n) if psi[i] != 0}
        assert support == {encode_index((j,) * n, d) for j in range(d)}


def test_werner_endpoints():
    assert np.abs(werner_state(2, 2, 0.0) - np.eye(4) / 4).max() <= 1e-15
    psi = ghz_state(2, 2)
    assert np.abs(werner_state(2, 2, 1.0) - np.outer(psi, psi.conj())).max() <= 1e-15


def test_werner_entries_closed_form():
    d, n, s = 3, 2, 0.4
    rho = werner_state(d, n, s)
    dim = d**n
    for j in range(d):
        for k in range(d):
            a = encode_index((j,) * n, d)
            b = encode_index((k,) * n, d)
            if j == k:
                assert abs(rho[a, b] - ((1 - s) / dim + s / d)) <= 1e-14
            else:
                assert abs(rho[a, b] - s / d) <= 1e-14
    # everything off the repeated-string block is purely diagonal noise
    assert abs(rho[1, 2]) == 0.0
    assert abs(rho[0, 1]) == 0.0
    assert abs(rho[1, 1] - (1 - s) / dim) <= 1e-14


def test_werner_affine_in_s():
    rho0 = werner_state(2, 3, 0.0)
    rho1 = werner_state(2, 3, 1.0)
    for s in [0.25, 0.5, 0.9]:
        assert np.abs(werner_state(2, 3, s) - ((1 - s) * rho0 + s * rho1)).max() <= 1e-15


def test_werner_density_invariants_on_grid():
    for d, n in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)]:
        s_star = float(separability_threshold(d, n))
        for s in [0.0, 0.25, s_star, 0.75, 1.0]:
            check_density(werner_state(d, n, s))


def test_werner_rejects_bad_s():
    with pytest.raises(InvalidParameterError):
        werner_state(2, 2, -0.1)
    with pytest.raises(InvalidParameterError):
        werner_state(2, 2, 1.1)


def test_phase_state_examples():
    v = phase_state(np.array([1, 1], dtype=complex))
    assert np.abs(v - np.array([1, 1]) / np.sqrt(2)).max() <= 1e-15
    v = phase_state(np.array([1, 1j], dtype=complex))
    outer = np.outer(v, v.conj())
    expected = 0.5 * np.array([[1, -1j], [1j, 1]])
    assert np.abs(outer - expected).max() <= 1e-15


def test_phase_state_rejects_non_unit():
    with pytest.raises(ContractViolationError):
        phase_state(np.array([1.0, 0.5]))


def test_phase_family_single_qudit_is_projector():
    rho = phase_family_density(2, 1)
    assert np.abs(rho - np.ones((2, 2)) / 2).max() <= 1e-15
    assert np.abs(rho @ rho - rho).max() <= 1e-12


def test_phase_family_projector_for_all_phase_vectors():
    # n=1 family members are pure for every fourth-root phase vector
    from wernercert.phases import enumerate_phase_vectors

    for d in (2, 3):
        for pv in enumerate_phase_vectors(d):
            rho = phase_family_density(d, 1, zeta=pv.values())
            assert np.abs(rho @ rho - rho).max() <= 1e-12


def test_phase_family_entries():
    d, n = 2, 2
    zeta = np.array([1.0, 1j])
    rho = phase_family_density(d, n, zeta=zeta)
    dim = d**n
    for j in range(d):
        for k in range(d):
            a = encode_index((j,) * n, d)
            b = encode_index((k,) * n, d)
            expected = (zeta[j] * np.conj(zeta[k])) / dim if j != k else 1.0 / dim
            assert abs(rho[a, b] - expected) <= 1e-15
    assert abs(np.trace(rho) - 1.0) <= 1e-12


def test_phase_family_completes_werner_split():
    # mixing the repeated-string projectors with the all-ones family member
    # at weights (s*, 1 - s*) reproduces the threshold state
    for d, n in [(2, 2), (3, 2), (2, 3)]:
        s_star = separability_threshold(d, n)
        diag = np.zeros((d**n, d**n), dtype=complex)
        for j in range(d):
            idx = encode_index((j,) * n, d)
            diag[idx, idx] = 1.0 / d
        lhs = werner_state(d, n, float(s_star))
        rhs = float(s_star) * diag + (1 - float(s_star)) * phase_family_density(d, n)
        assert np.abs(lhs - rhs).max() <= 1e-12


def test_phase_family_zeta_validation():
    with pytest.raises(InvalidParameterError):
        phase_family_density(2, 2, zeta=np.ones(3))
    with pytest.raises(ContractViolationError):
        phase_family_density(2, 2, zeta=np.array([1.0, 2.0]))
    with pytest.raises(InvalidParameterError):
        phase_family_density(1, 2)


def test_phase_family_trace_one_on_grid():
    rng = np.random.default_rng(23)
    for d, n in [(2, 2), (3, 2), (2, 3), (4, 2)]:
        theta = rng.uniform(0, 2 * np.pi, size=d)
        zeta = np.exp(1j * theta)
        rho = phase_family_density(d, n, zeta=zeta)
        assert abs(np.trace(rho) - 1.0) <= 1e-12
        assert np.abs(rho - rho.conj().T).max() <= 1e-12


def test_phase_family_invariant_under_global_phase():
    zeta = np.exp(1j * np.array([0.3, 1.1, 2.5]))
    a = phase_family_density(3, 2, zeta=zeta)
    b = phase_family_density(3, 2, zeta=np.exp(1j * 0.7) * zeta)
    assert np.abs(a - b).max() <= 1e-12

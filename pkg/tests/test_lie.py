import math

import numpy as np
import pytest

from asym import (
    GeneratorSet,
    clt_diagnostic,
    converse_certificate,
    g_function,
    qfim,
    qfim_pure,
    rf_ratio,
)
from asym.corpus import random_state
from asym.errors import DimensionMismatch, DomainError, NotAState
from asym.groups import PureState
from asym.lie import pure_density, symmetrized_covariance


@pytest.fixture
def spin_half():
    sx = np.array([[0.0, 0.5], [0.5, 0.0]])
    sy = np.array([[0.0, -0.5j], [0.5j, 0.0]])
    sz = np.array([[0.5, 0.0], [0.0, -0.5]])
    return GeneratorSet(dim=2, generators=np.array([sx, sy, sz]))


def test_generator_set_validation():
    with pytest.raises(DomainError):
        GeneratorSet(dim=2, generators=np.array([[[0.0, 1.0], [0.0, 0.0]]]))
    with pytest.raises(DimensionMismatch):
        GeneratorSet(dim=3, generators=np.zeros((1, 2, 2)))


def test_qfim_pure_spin_up(spin_half):
    # oracle: variances of the spin components in |0>: (1/4, 1/4, 0)
    F = qfim_pure(PureState(2, np.array([1.0, 0.0])), spin_half)
    assert np.allclose(F, np.diag([1.0, 1.0, 0.0]), atol=1e-12)


def test_qfim_matches_pure_formula_on_projector(spin_half, rng):
    state = random_state(2, rng)
    F_mixed_path = qfim(pure_density(state), spin_half)
    F_pure_path = qfim_pure(state, spin_half)
    assert np.allclose(F_mixed_path, F_pure_path, atol=1e-8)


def test_qfim_mixed_qubit_closed_form():
    # oracle: rho = diag(p, 1-p) with X = sigma_x / 2 gives F = (2p - 1)^2
    X = np.array([[[0.0, 0.5], [0.5, 0.0]]])
    gens = GeneratorSet(dim=2, generators=X)
    for p in (0.9, 0.7, 0.5):
        rho = np.diag([p, 1.0 - p]).astype(complex)
        F = qfim(rho, gens)
        assert F[0, 0] == pytest.approx((2 * p - 1) ** 2, abs=1e-12)


def test_qfim_covariant_under_generator_recombination(spin_half, rng):
    """X' = A X implies F' = A F A^T."""
    state = random_state(2, rng)
    F = qfim_pure(state, spin_half)
    A = rng.normal(size=(3, 3))
    recombined = GeneratorSet(
        dim=2, generators=np.tensordot(A, spin_half.generators, axes=1)
    )
    F2 = qfim_pure(state, recombined)
    assert np.allclose(F2, A @ F @ A.T, atol=1e-10)


def test_qfim_finite_difference(spin_half, rng):
    """F_ii ~ -8 log|chi(eps e_i)| / eps^2 to second order."""
    state = random_state(2, rng)
    F = qfim_pure(state, spin_half)
    eps = 1e-4
    for i, X in enumerate(spin_half.generators):
        w, V = np.linalg.eigh(X)
        U = (V * np.exp(-1j * eps * w)) @ V.conj().T
        chi = state.amplitudes.conj() @ (U @ state.amplitudes)
        approx = -8.0 * math.log(abs(chi)) / eps**2
        assert approx == pytest.approx(F[i, i], abs=1e-5 + 1e-5 * abs(F[i, i]))


def test_qfim_rejects_bad_density(spin_half):
    with pytest.raises(NotAState):
        qfim(np.diag([0.7, 0.7]), spin_half)
    with pytest.raises(NotAState):
        qfim(np.array([[1.0, 0.5], [0.0, 0.0]]), spin_half)


def test_symmetrized_covariance_is_psd(spin_half, rng):
    for _ in range(10):
        C = symmetrized_covariance(random_state(2, rng), spin_half)
        assert np.linalg.eigvalsh(C)[0] >= -1e-12


def test_rf_ratio_diagonal_closed_form():
    res = rf_ratio(np.diag([4.0, 2.0]), np.diag([1.0, 2.0]))
    assert res.r_f == pytest.approx(1.0, abs=1e-12)
    assert res.method == "closed_form"
    assert abs(abs(res.direction[1]) - 1.0) < 1e-10


def test_rf_ratio_singular_phi_bisection():
    res = rf_ratio(np.diag([2.0, 3.0]), np.diag([1.0, 0.0]))
    assert res.method == "bisection"
    assert res.r_f == pytest.approx(2.0, rel=1e-9)


def test_rf_ratio_zero_phi_is_infinite():
    res = rf_ratio(np.diag([1.0, 1.0]), np.zeros((2, 2)))
    assert res.r_f == math.inf


def test_rf_ratio_unbounded_when_phi_null_space_unconstrained():
    # F_phi supported only where F_psi is strictly larger than any multiple?
    # no: diag(1, 0) target with psi = identity is capped at r = 1
    res = rf_ratio(np.eye(2), np.diag([1.0, 0.0]))
    assert res.r_f == pytest.approx(1.0, rel=1e-9)


def test_rf_ratio_boundary_bracketing(rng):
    """At r_f the pencil is on the PSD boundary: feasible just below,
    infeasible just above."""
    for _ in range(10):
        B = rng.normal(size=(3, 3))
        F_phi = B @ B.T + 0.1 * np.eye(3)
        C = rng.normal(size=(3, 3))
        F_psi = C @ C.T
        res = rf_ratio(F_psi, F_phi)
        lo = np.linalg.eigvalsh(F_psi - (res.r_f - 1e-6) * F_phi)[0]
        hi = np.linalg.eigvalsh(F_psi - (res.r_f + 1e-6) * F_phi)[0]
        assert lo >= -1e-7
        assert hi <= 1e-7
        v = res.direction
        assert (v @ F_psi @ v) / (v @ F_phi @ v) == pytest.approx(res.r_f, abs=1e-6)


def test_g_function_values():
    assert g_function(0.0) == 1.0
    assert g_function(0.5) == pytest.approx(0.25, abs=1e-15)
    assert g_function(1e-9) == pytest.approx(1.0, abs=1e-6)
    with pytest.raises(DomainError):
        g_function(1.0)
    with pytest.raises(DomainError):
        g_function(-0.1)


def test_g_function_monotone_decreasing():
    xs = np.linspace(0.0, 0.999, 500)
    vals = [g_function(float(x)) for x in xs]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    assert all(0.0 < v <= 1.0 for v in vals)


def test_converse_certificate_diagonal_example():
    F_psi = np.diag([4.0, 2.0])
    F_phi = np.diag([1.0, 2.0])
    impossible, v, T = converse_certificate(F_psi, F_phi, r=2.0, delta=0.0)
    assert impossible
    assert T == pytest.approx(0.5, abs=1e-9)
    assert abs(abs(v[1]) - 1.0) < 1e-8
    # g(1/2) = 1/4 loses to 4 sqrt(delta) once delta > 1/256
    impossible, _, T2 = converse_certificate(F_psi, F_phi, r=2.0, delta=0.01)
    assert not impossible
    assert T2 == pytest.approx(T, abs=1e-9)


def test_converse_certificate_silent_below_rf():
    F_psi = np.diag([4.0, 2.0])
    F_phi = np.diag([1.0, 2.0])
    impossible, v, T = converse_certificate(F_psi, F_phi, r=0.9, delta=0.0)
    assert (impossible, v, T) == (False, None, None)


def test_converse_certificate_input_validation():
    with pytest.raises(DomainError):
        converse_certificate(np.eye(2), np.eye(2), r=0.0, delta=0.0)
    with pytest.raises(DomainError):
        converse_certificate(np.eye(2), np.eye(2), r=1.0, delta=-1e-3)


def test_clt_diagnostic_third_order_residual(spin_half, rng):
    state = random_state(2, rng)
    grid_big = [0.01 * v for v in (np.eye(3)[i] for i in range(3))]
    grid_small = [0.001 * v for v in (np.eye(3)[i] for i in range(3))]
    big = clt_diagnostic(state, spin_half, grid_big)
    small = clt_diagnostic(state, spin_half, grid_small)
    assert big < 1e-5
    assert small < 1e-8
    with pytest.raises(DimensionMismatch):
        clt_diagnostic(state, spin_half, [np.zeros(2)])

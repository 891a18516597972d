import math
import warnings

import numpy as np
import pytest

from kphoton_jc import dynamics
from kphoton_jc.dynamics import atomic_inversion, basis_state, coherent_field_state, evolve
from kphoton_jc.model import ModelParams, build_hamiltonian


def test_coherent_vacuum():
    np.testing.assert_array_equal(coherent_field_state(0, "g", 8), basis_state(0, "g", 8))


def test_coherent_mean_photon_number():
    psi = coherent_field_state(1.0, "e", 32)
    pop = np.abs(psi[0::2]) ** 2
    assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-15)
    assert np.dot(np.arange(32), pop) == pytest.approx(1.0, abs=1e-8)
    assert np.all(psi[1::2] == 0)


def test_coherent_truncation_guards():
    with pytest.raises(ValueError):
        coherent_field_state(3.0, "e", 16)
    with pytest.warns(dynamics.TruncationWarning):
        coherent_field_state(2.0, "e", 16)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        coherent_field_state(2.0, "e", 40)
    with pytest.raises(ValueError):
        coherent_field_state(1.0, "x", 16)


def test_inversion_examples():
    assert atomic_inversion(basis_state(0, "e", 6)) == 1.0
    assert atomic_inversion(basis_state(3, "g", 6)) == -1.0
    psi = (basis_state(0, "e", 6) + basis_state(1, "g", 6)) / math.sqrt(2)
    assert atomic_inversion(psi) == pytest.approx(0.0, abs=1e-15)


def test_evolve_t0_and_stationary():
    p = ModelParams(1, 1.0, 1.3, 0.0, 8)
    s0 = basis_state(0, "e", 8)
    traj = evolve(p, s0, [0.0, 1.0, 7.5])
    np.testing.assert_allclose(traj[0], s0, atol=1e-15)
    np.testing.assert_allclose(np.abs(traj), np.abs(s0)[None, :].repeat(3, 0), atol=1e-14)
    np.testing.assert_allclose(atomic_inversion(traj), 1.0, atol=1e-14)


def test_vacuum_rabi_transfer():
    # resonant 2x2 block with coupling g=0.1: P_e(t) = cos^2(g t), empty at pi/(2g)
    p = ModelParams(1, 1.0, 1.0, 0.1, 8)
    times = np.linspace(0, 5 * math.pi, 41)
    traj = evolve(p, basis_state(0, "e", 8), times)
    w = atomic_inversion(traj)
    np.testing.assert_allclose(w, np.cos(2 * 0.1 * times), atol=1e-12)
    assert w[-1] == pytest.approx(-1.0, abs=1e-6)
    assert abs(traj[-1][2 * 1 + 1]) == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("k,alpha", [(1, 1.5), (2, 1.0), (3, 0.7)])
def test_norm_and_energy_conservation(k, alpha):
    p = ModelParams(k, 1.0, 1.1 * k, 0.2, 32)
    h = build_hamiltonian(p)
    s0 = coherent_field_state(alpha, "e", 32)
    traj = evolve(p, s0, np.linspace(0, 50, 101))
    assert np.max(np.abs(np.linalg.norm(traj, axis=1) - 1)) <= 1e-9
    energies = dynamics.energy_expectation(h, traj)
    assert np.max(np.abs(energies - energies[0])) <= 1e-9 * np.max(np.abs(h))


def test_collapse_and_revival():
    lam, alpha = 0.1, 3.0
    p = ModelParams(1, 1.0, 1.0, lam, 64)
    t_rev = 2 * math.pi * alpha / lam
    times = np.linspace(0, 1.5 * t_rev, 3001)
    w = atomic_inversion(evolve(p, coherent_field_state(alpha, "e", 64), times))
    out = dynamics.collapse_revival(times, w, lam, alpha)
    assert out["collapse_amplitude"] < 0.1
    assert out["revival_amplitude"] > 0.3
    assert abs(out["revival_time"] - t_rev) <= 0.15 * t_rev
    assert out["passes"]


def test_evolve_rejects_wrong_shape():
    with pytest.raises(ValueError):
        evolve(ModelParams(1, 1.0, 1.0, 0.1, 8), np.zeros(5), [0.0])

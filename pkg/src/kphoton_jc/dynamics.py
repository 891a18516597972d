"""Exact time evolution by spectral decomposition, and atomic inversion.

States are complex vectors of length ``2*dim`` in the layout of
:mod:`kphoton_jc.model`. Trajectories are returned as 2-D arrays with one
row per time.
"""

from __future__ import annotations

import math
import warnings

import numpy as np

from .eigensolver import EigenResult, hermitian_eigen
from .model import EXCITED, GROUND, ModelParams, build_hamiltonian

TAIL_WARN = 1e-8


class TruncationWarning(UserWarning):
    """The truncated Fock space discards a noticeable part of the state."""


def _atom_index(atom: str) -> int:
    if atom == "e":
        return EXCITED
    if atom == "g":
        return GROUND
    raise ValueError(f"atom must be 'e' or 'g', got {atom!r}")


def basis_state(n: int, atom: str, dim: int) -> np.ndarray:
    psi = np.zeros(2 * dim, dtype=complex)
    psi[2 * n + _atom_index(atom)] = 1.0
    return psi


def coherent_amplitudes(alpha: complex, dim: int) -> tuple[np.ndarray, float]:
    """Truncated, renormalized coherent-field amplitudes and the discarded probability."""
    alpha = complex(alpha)
    nbar = abs(alpha) ** 2
    amps = np.empty(dim, dtype=complex)
    amps[0] = math.exp(-0.5 * nbar)
    for n in range(1, dim):
        amps[n] = amps[n - 1] * alpha / math.sqrt(n)
    kept = float(np.sum(np.abs(amps) ** 2))
    return amps / math.sqrt(kept), max(0.0, 1.0 - kept)


def coherent_field_state(alpha: complex, atom: str, dim: int) -> np.ndarray:
    """Coherent field ``|alpha>`` times an atomic level ``atom`` in ``{"e", "g"}``."""
    if abs(alpha) ** 2 > dim / 4:
        raise ValueError(f"|alpha|^2={abs(alpha) ** 2:g} exceeds dim/4={dim / 4:g}")
    amps, tail = coherent_amplitudes(alpha, dim)
    if tail > TAIL_WARN:
        warnings.warn(
            f"coherent state loses {tail:.2e} probability to truncation at dim={dim}",
            TruncationWarning,
            stacklevel=2,
        )
    psi = np.zeros(2 * dim, dtype=complex)
    psi[_atom_index(atom)::2] = amps
    return psi


def evolve_spectral(eig: EigenResult, s0: np.ndarray, times) -> np.ndarray:
    """Propagate ``s0`` with a precomputed eigendecomposition."""
    times = np.asarray(times, dtype=float)
    if not np.all(np.isfinite(times)):
        raise ValueError("times must be finite")
    coeff = eig.vectors.conj().T @ s0
    phases = np.exp(-1j * np.outer(times, eig.values))
    return (phases * coeff) @ eig.vectors.T


def evolve(p: ModelParams, s0: np.ndarray, times) -> np.ndarray:
    """``s(t) = sum_j exp(-i E_j t) <v_j|s0> |v_j>`` for each ``t`` in ``times``."""
    s0 = np.asarray(s0, dtype=complex)
    if s0.shape != (2 * p.dim,):
        raise ValueError(f"state has shape {s0.shape}, expected {(2 * p.dim,)}")
    eig = hermitian_eigen(build_hamiltonian(p))
    return evolve_spectral(eig, s0, times)


def atomic_inversion(s: np.ndarray) -> np.ndarray | float:
    """``<sigma_0>``: excited minus ground population. Works on one state or a trajectory."""
    s = np.asarray(s)
    pop = np.abs(s) ** 2
    w = pop[..., EXCITED::2].sum(axis=-1) - pop[..., GROUND::2].sum(axis=-1)
    return float(w) if np.ndim(w) == 0 else w


def energy_expectation(h: np.ndarray, s: np.ndarray) -> np.ndarray:
    s = np.atleast_2d(s)
    return np.real(np.einsum("ti,ij,tj->t", s.conj(), h, s))


def running_amplitude(times: np.ndarray, signal: np.ndarray, window: float) -> np.ndarray:
    """Oscillation amplitude ``sqrt(2) * std`` of ``signal`` over a centred window."""
    dt = times[1] - times[0]
    half = max(1, int(round(0.5 * window / dt)))
    out = np.empty_like(signal, dtype=float)
    for i in range(len(signal)):
        seg = signal[max(0, i - half) : i + half + 1]
        out[i] = math.sqrt(2.0) * float(np.std(seg))
    return out


def collapse_revival(times, inversion, coupling: float, alpha: complex) -> dict:
    """Locate collapse and first revival of the inversion of a resonant k=1 run.

    The envelope is the running amplitude over windows of width
    ``pi / coupling``. Collapse is the minimum envelope between the initial
    decay and half the revival time ``2 pi |alpha| / coupling``; the revival is
    the envelope maximum after that, searched up to 1.5 revival times.
    """
    times = np.asarray(times, dtype=float)
    inversion = np.asarray(inversion, dtype=float)
    t_rev = 2.0 * math.pi * abs(alpha) / coupling
    env = running_amplitude(times, inversion, math.pi / coupling)
    # first window fully past the initial oscillations
    early = times >= 2.0 * math.pi / coupling
    collapse_zone = early & (times <= 0.5 * t_rev)
    revival_zone = (times > 0.5 * t_rev) & (times <= 1.5 * t_rev)
    if not collapse_zone.any() or not revival_zone.any():
        raise ValueError("time grid does not cover collapse and revival windows")
    collapse = float(env[collapse_zone].min())
    i_rev = np.flatnonzero(revival_zone)[np.argmax(env[revival_zone])]
    t_peak = float(times[i_rev])
    revival = float(env[i_rev])
    return {
        "t_revival_expected": t_rev,
        "collapse_amplitude": collapse,
        "revival_amplitude": revival,
        "revival_time": t_peak,
        "passes": collapse < 0.1 and revival > 0.3 and abs(t_peak - t_rev) <= 0.15 * t_rev,
    }

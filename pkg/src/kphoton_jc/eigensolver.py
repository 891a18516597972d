"""Dense Hermitian eigensolver (cyclic Jacobi).

This is the brute-force reference used to check every closed-form result in
the package. It deliberately avoids LAPACK so that the checks do not share
code paths with anything they validate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_SIZE = 1024


class ConvergenceError(RuntimeError):
    """Raised when the Jacobi sweeps fail to reach the requested tolerance."""


@dataclass(frozen=True)
class EigenResult:
    values: np.ndarray  # ascending, real
    vectors: np.ndarray  # columns are eigenvectors
    iterations: int  # number of sweeps performed
    offdiag_residual: float  # final off-diagonal Frobenius norm


def _check_hermitian(m: np.ndarray, atol: float = 1e-12) -> np.ndarray:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_SIZE:
        raise ValueError(f"matrix size {m.shape[0]} exceeds {MAX_SIZE}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(m), initial=0.0)))
    if np.max(np.abs(m - m.conj().T), initial=0.0) > atol * scale:
        raise ValueError("matrix is not Hermitian")
    return m


def _offdiag_norm(a: np.ndarray) -> float:
    # direct sum; ||a||^2 - ||diag||^2 cancels catastrophically near convergence
    off = a - np.diag(np.diagonal(a))
    return float(np.linalg.norm(off))


def hermitian_eigen(m: np.ndarray, tol: float = 1e-14, max_sweeps: int = 100) -> EigenResult:
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops to
    ``tol * ||m||_F``. Pairs whose element is already below
    ``tol * ||m||_F / n`` are skipped (threshold Jacobi), which keeps
    block-sparse inputs such as Jaynes-Cummings Hamiltonians cheap.
    """
    m = _check_hermitian(m)
    n = m.shape[0]
    a = np.array(m, dtype=complex)
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)
    scale = float(np.linalg.norm(a))
    if n <= 1 or scale == 0.0:
        vals = np.real(np.diagonal(a)).copy()
        return EigenResult(vals, v, 0, 0.0)

    target = tol * scale
    skip = target / n
    sweeps = 0
    off = _offdiag_norm(a)
    while off > target:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal {off:.3e})"
            )
        sweeps += 1
        # scan the upper triangle on a host copy of the magnitudes; cheap for sparse inputs
        mags = np.abs(np.triu(a, 1))
        for p, q in zip(*np.nonzero(mags > skip)):
            apq = a[p, q]
            r = abs(apq)
            if r <= skip:
                continue
            app = a[p, p].real
            aqq = a[q, q].real
            phase = apq / r
            tau = (aqq - app) / (2.0 * r)
            t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            # G = diag(1, conj(phase)) @ [[c, s], [-s, c]]
            g = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
            idx = [p, q]
            a[:, idx] = a[:, idx] @ g
            a[idx, :] = g.conj().T @ a[idx, :]
            v[:, idx] = v[:, idx] @ g
            a[p, q] = a[q, p] = 0.0
            a[p, p] = app - t * r
            a[q, q] = aqq + t * r
        off = _offdiag_norm(a)

    vals = np.real(np.diagonal(a)).copy()
    order = np.argsort(vals, kind="stable")
    return EigenResult(vals[order], v[:, order], sweeps, off)


def residual(m: np.ndarray, value: float, vector: np.ndarray) -> float:
    """Relative eigen-residual ``||m v - value v|| / ||v||``."""
    vector = np.asarray(vector)
    nv = np.linalg.norm(vector)
    if nv == 0.0:
        raise ValueError("zero vector has no eigen-residual")
    return float(np.linalg.norm(m @ vector - value * vector) / nv)

"""Named consistency checks run by ``kphoton-jc validate``.

Every check returns a :class:`CheckResult`; none of them raise on failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fock, su2
from .eigensolver import hermitian_eigen, residual
from .model import (
    ModelParams,
    analytic_eigenspinor,
    analytic_spectrum,
    build_hamiltonian,
    spectrum_discrepancy_report,
    uncoupled_eigenspinor,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    value: float
    tolerance: float
    detail: str = ""


def check_spectrum(p: ModelParams, tol: float = 1e-9, convention: str = "squared", oracle=None):
    """Every analytic level sits on a Jacobi eigenvalue, and the multisets agree.

    The edge levels ``|n, e>`` with ``n > dim-1-k`` are truncation artifacts
    with energy ``w n + w0/2``; they are added to the analytic list so the full
    sorted spectra can be compared one-to-one.
    """
    if oracle is None:
        oracle = hermitian_eigen(build_hamiltonian(p)).values
    levels = [e.total_energy for e in analytic_spectrum(p, convention=convention)]
    nearest = max(float(np.min(np.abs(oracle - e))) for e in levels)
    edge = [p.omega * n + 0.5 * p.omega0 for n in range(p.n_safe_max + 1, p.dim)]
    full = np.sort(np.array(levels + edge))
    sorted_dev = float(np.max(np.abs(full - oracle))) if len(full) == len(oracle) else math.inf
    worst = max(nearest, sorted_dev)
    return CheckResult(
        "spectrum",
        worst <= tol,
        worst,
        tol,
        f"convention={convention} nearest={nearest:.3e} sorted={sorted_dev:.3e}",
    )


def check_eigenspinors(p: ModelParams, tol: float = 1e-10, n_max: int | None = None):
    h = build_hamiltonian(p)
    n_max = p.n_safe_max if n_max is None else n_max
    spectrum = {(e.n, e.branch, e.sector): e.total_energy for e in analytic_spectrum(p, n_max)}
    worst = 0.0
    for (n, branch, sector), energy in spectrum.items():
        if sector == "coupled":
            spinor = analytic_eigenspinor(p, n, branch)
        else:
            spinor = uncoupled_eigenspinor(p, n)
        worst = max(worst, residual(h, energy, spinor.to_state()), abs(spinor.norm() - 1.0))
    return CheckResult("eigenspinor_residual", worst <= tol, worst, tol)


def check_tilting(n_samples: int = 100, tol: float = 1e-13, seed: int = 0):
    rng = np.random.default_rng(seed)
    j0, jp, jm = su2.pauli_realization()
    gens = {"J0": j0, "J+": jp, "J-": jm}
    worst = 0.0
    for _ in range(n_samples):
        tilt = su2.TiltParams(rng.uniform(0.01, 3.0), rng.uniform(0.0, 2 * math.pi))
        d = su2.displacement_matrix(tilt)
        for name, g in gens.items():
            brute = d.conj().T @ g @ d
            worst = max(worst, float(np.max(np.abs(su2.tilt_generator(name, tilt) - brute))))
    return CheckResult("tilting_identities", worst <= tol, worst, tol)


def check_gauss(n_samples: int = 100, tol: float = 1e-13, seed: int = 1):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_samples):
        tilt = su2.TiltParams(rng.uniform(0.01, 3.0), rng.uniform(0.0, 2 * math.pi))
        zeta, eta = su2.gauss_decompose(tilt)
        diff = su2.gauss_product(zeta, eta) - su2.displacement_matrix(tilt)
        worst = max(worst, float(np.max(np.abs(diff))))
    return CheckResult("gauss_decomposition", worst <= tol, worst, tol)


def check_perelomov(n_zeta: int = 20, tol: float = 1e-12, seed: int = 2):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for two_j in range(1, 11):
        j = two_j / 2
        for _ in range(n_zeta):
            zeta = complex(rng.normal(), rng.normal())
            for i in range(two_j + 1):
                st = su2.perelomov_number_state(j, -j + i, zeta)
                worst = max(worst, abs(float(np.linalg.norm(st.coefficients)) - 1.0))
            lowest = su2.perelomov_number_state(j, -j, zeta).coefficients
            ref = su2.perelomov_coherent_coefficients(j, zeta)
            worst = max(worst, float(np.max(np.abs(lowest - ref))))
    for _ in range(n_zeta):
        tilt = su2.TiltParams(rng.uniform(-3.0, 3.0), rng.uniform(0.0, 2 * math.pi))
        d = su2.displacement_matrix(tilt)
        for i, mu in enumerate((-0.5, 0.5)):
            st = su2.perelomov_number_state(0.5, mu, tilt.zeta).coefficients
            # Pauli ordering is (m=+1/2, m=-1/2); Perelomov ordering is ascending m
            col = d[::-1, 1 - i]
            worst = max(worst, float(np.max(np.abs(st - col))))
    return CheckResult("perelomov_states", worst <= tol, worst, tol)


def check_pseudo_inverse(dim: int = 32, tol: float = 1e-13):
    space = fock.FockSpace(dim)
    worst = 0.0
    for k in (1, 2, 3, 4):
        adk = fock.ladder_power(space, k, dagger=True)
        eye = np.eye(dim)
        window = list(space.safe_window(k))
        upper = list(range(k, dim))
        p_anti = fock.pseudo_inverse_creation(space, k, "antinormal")
        p_norm = fock.pseudo_inverse_creation(space, k, "normal")
        right = (adk @ p_anti - eye)[:, upper]
        left_target = eye.copy()
        left_target[:k, :k] = 0.0
        left = (p_norm @ adk - left_target)[:, window]
        worst = max(worst, float(np.max(np.abs(right))), float(np.max(np.abs(left))))
    return CheckResult("pseudo_inverse", worst <= tol, worst, tol)


def check_discrepancy(p: ModelParams | None = None):
    """The squared-coupling spectrum must match brute force and the literal one must not."""
    p = p or ModelParams(k=2, omega=1.0, omega0=2.0, coupling=0.1, dim=32)
    rep = spectrum_discrepancy_report(p, n_max=0)
    n0 = [r for r in rep["rows"] if r["sector"] == "coupled" and r["n"] == 0]
    dev_lit = min(r["dev_literal"] for r in n0)
    ok = rep["squared_agrees"] and dev_lit > 1e-2
    return CheckResult(
        "discrepancy",
        ok,
        rep["max_dev_squared"],
        1e-9,
        f"literal deviation at n=0: {dev_lit:.6f}",
    )


def run_all(p: ModelParams, tol: float = 1e-9, literal: bool = False) -> list[CheckResult]:
    convention = "literal" if literal else "squared"
    return [
        check_spectrum(p, tol, convention),
        check_eigenspinors(p),
        check_tilting(),
        check_gauss(),
        check_perelomov(),
        check_pseudo_inverse(),
        check_discrepancy(),
    ]

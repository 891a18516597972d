"""k-photon Jaynes-Cummings Hamiltonian and its closed-form solution.

Basis layout: the composite state ``|n> (x) |atom>`` lives at index
``2*n + a`` with ``a = 0`` for the excited level ``e`` and ``a = 1`` for the
ground level ``g`` (``np.kron(field, atom)`` order). hbar = 1.

The coupling ``lambda (sigma_+ a^k + sigma_- a^dagger^k)`` only links
``|n, e>`` with ``|n+k, g>``, so the interaction Hamiltonian is a direct sum
of 2x2 blocks

    [[ Delta/2,               lambda sqrt((n+k)!/n!) ],
     [ lambda sqrt((n+k)!/n!), -Delta/2              ]]

plus the uncoupled levels ``|m, g>``, ``m < k``. Closed forms here are
validated against :mod:`kphoton_jc.eigensolver`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fock import FockSpace, ladder_power, number_operator
from .su2 import TiltParams, displacement_matrix

EXCITED, GROUND = 0, 1

SIGMA_0 = np.diag([1.0, -1.0]).astype(complex)
SIGMA_PLUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)  # |e><g|
SIGMA_MINUS = SIGMA_PLUS.T.copy()


def basis_index(n: int, atom: int) -> int:
    return 2 * n + atom


@dataclass(frozen=True)
class ModelParams:
    k: int = 2
    omega: float = 1.0
    omega0: float = 2.0
    coupling: float = 0.1
    dim: int = 32

    def __post_init__(self):
        if not isinstance(self.k, (int, np.integer)) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        for name in ("omega", "omega0", "coupling"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.omega <= 0:
            raise ValueError("omega must be positive")
        if self.coupling < 0:
            raise ValueError("coupling must be non-negative")
        if not isinstance(self.dim, (int, np.integer)) or self.dim < self.k + 4:
            raise ValueError(f"dim={self.dim} too small; need dim >= k + 4 = {self.k + 4}")

    @property
    def detuning(self) -> float:
        return self.omega0 - self.k * self.omega

    @property
    def space(self) -> FockSpace:
        return FockSpace(self.dim)

    @property
    def n_safe_max(self) -> int:
        """Largest block index whose partner ``|n+k, g>`` fits in the truncation."""
        return self.dim - 1 - self.k


@dataclass(frozen=True)
class SpectrumEntry:
    n: int
    branch: int  # +1 or -1; uncoupled levels carry -1 (ground atom)
    sector: str  # "coupled" or "uncoupled"
    detuning: float
    interaction_energy: float
    total_energy: float


@dataclass(frozen=True)
class Spinor:
    """Eigenfunction as excited (``up``) and ground (``down``) Fock components."""

    up: np.ndarray
    down: np.ndarray
    n: int = 0
    branch: int = 1

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.up, self.up).real + np.vdot(self.down, self.down).real))

    def to_state(self) -> np.ndarray:
        psi = np.zeros(2 * len(self.up), dtype=complex)
        psi[EXCITED::2] = self.up
        psi[GROUND::2] = self.down
        return psi


def ladder_factor(n: int, k: int) -> float:
    """``(n+k)!/n!``: eigenvalue of ``a^k a^dagger^k`` on ``|n>``."""
    return float(math.perm(n + k, k))


def _check_block(p: ModelParams, n: int) -> None:
    if not 0 <= n <= p.n_safe_max:
        raise ValueError(f"block index n={n} outside safe window 0..{p.n_safe_max}")


def _coupling_term(p: ModelParams) -> np.ndarray:
    # sigma_- a^dag^k is taken as the adjoint of sigma_+ a^k so H is Hermitian bit for bit
    raise_atom = p.coupling * np.kron(ladder_power(p.space, p.k), SIGMA_PLUS)
    return raise_atom + raise_atom.conj().T


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    """Full RWA Hamiltonian ``w a^dag a + (w0/2) sigma_0 + lambda(sigma_+ a^k + sigma_- a^dag^k)``."""
    space = p.space
    eye_f, eye_a = np.eye(p.dim), np.eye(2)
    h = p.omega * np.kron(number_operator(space), eye_a)
    h = h + 0.5 * p.omega0 * np.kron(eye_f, SIGMA_0)
    return h + _coupling_term(p)


def build_interaction_hamiltonian(p: ModelParams) -> np.ndarray:
    """``Delta J0 + lambda(J+ a^k + J- a^dag^k)`` with ``Delta = w0 - k w``."""
    return 0.5 * p.detuning * np.kron(np.eye(p.dim), SIGMA_0) + _coupling_term(p)


def conserved_part(p: ModelParams) -> np.ndarray:
    """``H - H_I = w (a^dag a + k sigma_0 / 2)``, the excitation-number term."""
    return p.omega * (
        np.kron(number_operator(p.space), np.eye(2)) + 0.5 * p.k * np.kron(np.eye(p.dim), SIGMA_0)
    )


@dataclass
class BlockDecomposition:
    """2x2 coupled blocks keyed by ``n`` plus 1x1 diagonal entries keyed by basis index.

    ``uncoupled`` holds the physical levels ``|m, g>`` (``m < k``); ``edge``
    holds ``|n, e>`` for ``n > dim-1-k``, whose partner fell off the
    truncation. The edge levels are artifacts and never enter the spectrum.
    """

    dim: int
    k: int
    blocks: dict[int, np.ndarray] = field(default_factory=dict)
    uncoupled: dict[int, float] = field(default_factory=dict)
    edge: dict[int, float] = field(default_factory=dict)

    def block_indices(self, n: int) -> tuple[int, int]:
        return basis_index(n, EXCITED), basis_index(n + self.k, GROUND)

    def reassemble(self) -> np.ndarray:
        h = np.zeros((2 * self.dim, 2 * self.dim), dtype=complex)
        for n, b in self.blocks.items():
            idx = self.block_indices(n)
            h[np.ix_(idx, idx)] = b
        for i, val in {**self.uncoupled, **self.edge}.items():
            h[i, i] = val
        return h


def coupling_element(p: ModelParams, n: int) -> float:
    return p.coupling * math.sqrt(ladder_factor(n, p.k))


def block_decompose(p: ModelParams) -> BlockDecomposition:
    half = 0.5 * p.detuning
    dec = BlockDecomposition(p.dim, p.k)
    for n in range(p.n_safe_max + 1):
        g = coupling_element(p, n)
        dec.blocks[n] = np.array([[half, g], [g, -half]], dtype=complex)
    for m in range(p.k):
        dec.uncoupled[basis_index(m, GROUND)] = -half
    for n in range(p.n_safe_max + 1, p.dim):
        dec.edge[basis_index(n, EXCITED)] = half
    return dec


def mixing_angle(p: ModelParams, n: int) -> tuple[float, float]:
    """Tilt parameters ``(theta_n, varphi)`` that diagonalize block ``n``.

    ``theta_n`` solves ``tan(theta) = 2 lambda sqrt((n+k)!/n!) / Delta`` on the
    branch ``[0, pi]`` (``atan2``), so ``theta = pi/2`` at resonance and the
    rotation stays continuous through ``Delta = 0``. With a real non-negative
    coupling the phase is ``varphi = 0``.
    """
    _check_block(p, n)
    theta = math.atan2(2.0 * coupling_element(p, n), p.detuning)
    return theta, 0.0


def interaction_energy(p: ModelParams, n: int, convention: str = "squared") -> float:
    """``(1/2) sqrt(Delta^2 + 4 lambda^2 (n+k)!/n!)``.

    ``convention="literal"`` uses ``4 lambda`` in place of ``4 lambda^2``.
    That variant is dimensionally inconsistent with the 2x2 blocks and is
    kept only for the discrepancy report.
    """
    if convention == "squared":
        c = p.coupling**2
    elif convention == "literal":
        c = p.coupling
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return 0.5 * math.sqrt(p.detuning**2 + 4.0 * c * ladder_factor(n, p.k))


def analytic_spectrum(
    p: ModelParams, n_max: int | None = None, convention: str = "squared"
) -> list[SpectrumEntry]:
    """Closed-form eigenvalues, ordered by (sector, n, branch).

    Coupled levels ``E = w(2n+k)/2 +/- E_I`` for ``n = 0..n_max`` followed by
    the uncoupled ground levels ``E = w m - w0/2`` for ``m < k``.
    """
    if n_max is None:
        n_max = p.n_safe_max
    if not 0 <= n_max <= p.n_safe_max:
        raise ValueError(f"n_max={n_max} outside safe window 0..{p.n_safe_max}")
    delta = p.detuning
    out = []
    for n in range(n_max + 1):
        e_i = interaction_energy(p, n, convention)
        centre = 0.5 * p.omega * (2 * n + p.k)
        for branch in (1, -1):
            out.append(SpectrumEntry(n, branch, "coupled", delta, e_i, centre + branch * e_i))
    for m in range(p.k):
        out.append(
            SpectrumEntry(m, -1, "uncoupled", delta, 0.0 - 0.5 * delta, p.omega * m - 0.5 * p.omega0)
        )
    return out


def analytic_eigenspinor(p: ModelParams, n: int, branch: int) -> Spinor:
    """Dressed state of block ``n``: a column of ``D(xi_n)`` placed on ``|n, e>``, ``|n+k, g>``.

    ``branch=+1`` is the upper level, which tends to ``|n, e>`` as the
    coupling vanishes for positive detuning.
    """
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    theta, varphi = mixing_angle(p, n)
    d = displacement_matrix(TiltParams(theta, varphi))
    # with varphi = 0, xi/|xi| = -1, so D = [[c, -s], [s, c]]
    col = d[:, 0] if branch == 1 else d[:, 1]
    col = col / np.linalg.norm(col)
    up = np.zeros(p.dim, dtype=complex)
    down = np.zeros(p.dim, dtype=complex)
    up[n] = col[0]
    down[n + p.k] = col[1]
    return Spinor(up, down, n, branch)


def uncoupled_eigenspinor(p: ModelParams, m: int) -> Spinor:
    if not 0 <= m < p.k:
        raise ValueError(f"uncoupled level m={m} requires m < k={p.k}")
    up = np.zeros(p.dim, dtype=complex)
    down = np.zeros(p.dim, dtype=complex)
    down[m] = 1.0
    return Spinor(up, down, m, -1)


def ratio_form_spinor_weights(e_i: float) -> tuple[float, float]:
    """Component weights of the spinor written in E_I-ratio form.

    The prefactors ``sqrt2 E/(sqrt(E+D) -/+ sqrt(E-D))`` multiply the
    ``D(xi)`` column factors ``(sqrt(1+D/E) -/+ sqrt(1-D/E))/sqrt2``; the
    detuning cancels and both weights reduce to ``sqrt(E_I)``. The squared
    norm is therefore ``2 E_I``, not 1.
    """
    w = math.sqrt(e_i)
    return w, w


def restricted_block(h: np.ndarray, p: ModelParams, n: int) -> np.ndarray:
    """``h`` restricted to the invariant pair ``|n, e>``, ``|n+k, g>``."""
    _check_block(p, n)
    idx = [basis_index(n, EXCITED), basis_index(n + p.k, GROUND)]
    return h[np.ix_(idx, idx)]


def spectrum_discrepancy_report(p: ModelParams, n_max: int | None = None) -> dict:
    """Compare the squared-coupling and literal-coupling spectra with brute force.

    Each coupled level is checked against the Jacobi eigenvalues of the full
    Hamiltonian restricted to its own invariant pair, upper branch against the
    larger eigenvalue. Uncoupled levels are checked against the diagonal of
    ``H`` on ``|m, g>``.
    """
    from .eigensolver import hermitian_eigen

    if n_max is None:
        n_max = min(p.n_safe_max, 10)
    h = build_hamiltonian(p)
    squared = analytic_spectrum(p, n_max, "squared")
    literal = analytic_spectrum(p, n_max, "literal")
    oracle_cache: dict[int, np.ndarray] = {}
    rows = []
    for sq, lit in zip(squared, literal):
        if sq.sector == "coupled":
            if sq.n not in oracle_cache:
                oracle_cache[sq.n] = hermitian_eigen(restricted_block(h, p, sq.n)).values
            ref = oracle_cache[sq.n][1 if sq.branch == 1 else 0]
            norm = math.hypot(*ratio_form_spinor_weights(sq.interaction_energy))
        else:
            ref = h[basis_index(sq.n, GROUND), basis_index(sq.n, GROUND)].real
            norm = None
        rows.append(
            {
                "n": sq.n,
                "branch": sq.branch,
                "sector": sq.sector,
                "E_oracle": float(ref),
                "E_squared": sq.total_energy,
                "E_literal": lit.total_energy,
                "dev_squared": float(abs(sq.total_energy - ref)),
                "dev_literal": float(abs(lit.total_energy - ref)),
                "ratio_form_spinor_norm": norm,
            }
        )
    max_sq = max(r["dev_squared"] for r in rows)
    max_lit = max(r["dev_literal"] for r in rows)
    indistinguishable = p.coupling in (0.0, 1.0)
    return {
        "rows": rows,
        "max_dev_squared": max_sq,
        "max_dev_literal": max_lit,
        "indistinguishable": indistinguishable,
        "squared_agrees": bool(max_sq <= 1e-9),
        "literal_rejected": bool((not indistinguishable) and max_lit > 1e-3),
    }
